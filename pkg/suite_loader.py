"""
Dynamic Suite Loader
Loads verification suites dynamically based on configuration file.
"""

import importlib
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Type

import yaml

import config
from verification.base_suite import BaseSuite

logger = logging.getLogger(__name__)


@dataclass
class SuiteSpec:
    """One suite entry of the configuration file."""
    name: str
    suite_class: Type[BaseSuite]
    kinds: List[str]
    description: str = ""
    checks: List[str] = field(default_factory=list)
    check_descriptions: Dict[str, str] = field(default_factory=dict)
    informational: List[str] = field(default_factory=list)


class SuiteLoader:
    """Dynamically loads suite classes based on configuration."""

    def __init__(self, config_path: str = config.SUITES_CONFIG):
        self.config_path = config_path
        self.config = self._load_config()
        self._class_cache = {}

    def _load_config(self) -> dict:
        """Load the suites configuration file."""
        config_file = Path(self.config_path)
        if not config_file.exists() and not config_file.is_absolute():
            config_file = Path(__file__).parent / config_file
        if not config_file.exists():
            raise FileNotFoundError(
                f"Configuration file not found: {self.config_path}\n"
                "Set SUITES_CONFIG or run from the repository root."
            )

        with open(config_file, 'r') as f:
            return yaml.safe_load(f) or {}

    def _load_suite_class(self, module_path: str, class_name: str) -> Type[BaseSuite]:
        """Dynamically import and return a suite class."""
        cache_key = f"{module_path}.{class_name}"

        if cache_key in self._class_cache:
            return self._class_cache[cache_key]

        try:
            module = importlib.import_module(module_path)
            suite_class = getattr(module, class_name)
        except (ImportError, AttributeError) as e:
            raise ImportError(f"Failed to import {class_name} from {module_path}: {e}") from e

        if not (isinstance(suite_class, type) and issubclass(suite_class, BaseSuite)):
            raise TypeError(f"{class_name} is not a subclass of BaseSuite")

        self._class_cache[cache_key] = suite_class
        return suite_class

    def suite_names(self) -> List[str]:
        return list(self.config.get('suites', {}))

    def get_suite(self, name: str) -> SuiteSpec:
        """
        Resolve a suite by name.

        Args:
            name: Suite name as used on the command line (e.g. 'glb-point')

        Returns:
            SuiteSpec with the imported class and its ordered check ids

        Raises:
            KeyError: Unknown suite
            TypeError: A declared check has no check_<id> method
        """
        suites = self.config.get('suites', {})
        if name not in suites:
            raise KeyError(f"Unknown suite '{name}' (available: {', '.join(suites)})")
        entry = suites[name]
        suite_class = self._load_suite_class(entry['module'], entry['class'])

        checks = [check['id'] for check in entry.get('checks', [])]
        missing = [check_id for check_id in checks
                   if not callable(getattr(suite_class, f"check_{check_id}", None))]
        if missing:
            raise TypeError(f"{entry['class']} does not implement: "
                            f"{', '.join(f'check_{c}' for c in missing)}")

        return SuiteSpec(
            name=name,
            suite_class=suite_class,
            kinds=list(entry.get('kinds', [])),
            description=entry.get('description', ''),
            checks=checks,
            check_descriptions={check['id']: check.get('description', '')
                                for check in entry.get('checks', [])},
            informational=[check['id'] for check in entry.get('checks', [])
                           if check.get('informational', False)],
        )

    def list_suites(self) -> Dict[str, dict]:
        """All configured suites with their accepted kinds and check ids."""
        result = {}
        for name, entry in self.config.get('suites', {}).items():
            result[name] = {
                'description': entry.get('description', 'No description'),
                'kinds': entry.get('kinds', []),
                'checks': [check['id'] for check in entry.get('checks', [])],
            }
        return result
