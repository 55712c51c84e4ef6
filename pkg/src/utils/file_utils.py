"""
File Utilities Module
Helper functions for reading inputs and writing reports
"""

import json
from pathlib import Path
from typing import Any, Union

from .errors import ParseError


class FileUtils:
    """File handling utilities"""

    @staticmethod
    def save_json(data: Any, filepath: Union[str, Path]):
        """Save data as JSON file"""
        FileUtils.ensure_dir(Path(filepath).parent)
        with open(filepath, 'w', encoding='utf-8') as f:
            json.dump(data, f, indent=2, ensure_ascii=False)

    @staticmethod
    def load_json(filepath: Union[str, Path]) -> Any:
        """Load JSON file; unreadable or malformed files raise ParseError"""
        try:
            with open(filepath, 'r', encoding='utf-8') as f:
                return json.load(f)
        except FileNotFoundError as e:
            raise ParseError(f"input file not found: {filepath}") from e
        except json.JSONDecodeError as e:
            raise ParseError(f"malformed JSON in {filepath}: {e}") from e

    @staticmethod
    def ensure_dir(directory: Union[str, Path]):
        """Create directory if it doesn't exist"""
        Path(directory).mkdir(parents=True, exist_ok=True)

    @staticmethod
    def write_text(text: str, filepath: Union[str, Path]):
        FileUtils.ensure_dir(Path(filepath).parent)
        with open(filepath, 'w', encoding='utf-8', newline='') as f:
            f.write(text)
