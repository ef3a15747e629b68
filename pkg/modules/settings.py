import json
import os
import sys
from typing import Any, Dict, Optional

from dotenv import load_dotenv

from modules.errors import ConfigurationError

load_dotenv()


class Settings:
    def __init__(self, settings_file: Optional[str] = None) -> None:
        default_file = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'settings.json')
        self.settings_file: str = settings_file or os.environ.get('CELLGAP_SETTINGS') or default_file
        self.default_settings: Dict[str, Any] = {
            # Largest n enumerated per family (TL: 2n <= 28)
            'enumeration_max_n': {
                'tl': 14,
                'motzkin': 8,
                'brauer': 7,
                'prook': 9,
                'rook': 6,
                'rookbrauer': 6,
                'ppartition': 6,
                'partition': 5,
                'sym': 8,
                'transformation': 6,
            },
            'table_max_size': 6000,  # Largest monoid that gets a full multiplication table
            'associativity_exhaustive_limit': 512,
            'associativity_samples': 20000,

            'protocol_word_length': 6,  # Length of the random words sampled from A and B
            'protocol_default_seed': 0,

            'threads': 1,

            # Logging
            'log_retention_days': 30,
            'log_dir': None,  # None means ~/.cellgap/logs
            'console_log_level': 'WARNING',
        }
        self.current_settings: Dict[str, Any] = self.load_settings()

    def load_settings(self) -> Dict[str, Any]:
        try:
            if os.path.exists(self.settings_file):
                with open(self.settings_file, 'r') as f:
                    return {**self.default_settings, **json.load(f)}
            else:
                # File doesn't exist, create it with default settings
                self.save_defaults()
                return self.default_settings.copy()
        except Exception as e:
            print(f"Error loading settings: {str(e)}", file=sys.stderr)
            return self.default_settings.copy()

    def save_defaults(self) -> None:
        """Create settings file with default values if it doesn't exist"""
        try:
            with open(self.settings_file, 'w') as f:
                json.dump(self.default_settings, f, indent=4)
        except Exception as e:
            print(f"Error creating default settings file: {str(e)}", file=sys.stderr)

    def save_settings(self) -> None:
        try:
            with open(self.settings_file, 'w') as f:
                json.dump(self.current_settings, f, indent=4)
        except Exception as e:
            print(f"Error saving settings: {str(e)}", file=sys.stderr)

    def get(self, key: str) -> Any:
        return self.current_settings.get(key, self.default_settings.get(key))

    def set(self, key: str, value: Any) -> None:
        self.current_settings[key] = value
        self.save_settings()

    def guard(self, family: str) -> int:
        """Largest n that may be enumerated for a family tag."""
        limits = {**self.default_settings['enumeration_max_n'], **(self.get('enumeration_max_n') or {})}
        value = limits.get(family, 0)
        if isinstance(value, bool) or not isinstance(value, int) or value < 0:
            raise ConfigurationError(f"enumeration_max_n.{family} must be a non-negative integer, got {value!r}")
        return value
