"""
Command-Line Package
"""

from .parser import build_parser
from .commands import (
    cmd_divergence,
    cmd_embed,
    cmd_project,
    cmd_spectrum,
    cmd_verify,
    main,
    run_command,
)

__all__ = [
    "build_parser",
    "cmd_divergence",
    "cmd_embed",
    "cmd_project",
    "cmd_spectrum",
    "cmd_verify",
    "main",
    "run_command",
]
