"""
ncgeom entry point

Usage:
    python run_verification.py verify [--config suite.json] [--seed 42] [--out report.jsonl]
    python run_verification.py divergence --phi phi.json --psi psi.json --alpha 0
    python run_verification.py project --y y.json --set cone.json
    python run_verification.py embed --omega omega.json --alpha 0.5 --dual
    python run_verification.py spectrum --phi phi.json --psi psi.json --function log

Example:
    python run_verification.py verify --checks divergence.worked_example lp.fenchel_young
"""

import sys

from src.cli.commands import main


if __name__ == "__main__":
    sys.exit(main())
