#!/usr/bin/env python3
"""
Configuration loader for vvgamma

Loads the quadrature defaults and the Maass finite-difference sample points
from JSON files and validates them against the schemas in schemas/.
The configuration directory defaults to config/ next to this script and can
be moved with the VVGAMMA_CONFIG_DIR environment variable.

Usage:
    from config_loader import ConfigLoader
    loader = ConfigLoader()
    spec = loader.quadrature_spec()
    samples = loader.maass_samples()

CLI:
    python config_loader.py --list
    python config_loader.py --validate config/quadrature.json
"""

import argparse
import json
import logging
import os
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

import jsonschema
import numpy as np

from exact import as_rational
from numeric_oracle import QuadratureSpec

logger = logging.getLogger(__name__)

CONFIG_DIR_ENV = "VVGAMMA_CONFIG_DIR"
BASE_DIR = Path(__file__).parent
SCHEMAS_DIR = BASE_DIR / "schemas"

# (T, Z0) pairs used when config/maass_samples.json is absent
DEFAULT_MAASS_SAMPLES = [
    {"t": [[1, 0], [0, 1]],
     "z0": {"real": [[0, 0], [0, 0]], "imag": [[1, 0], [0, 1]]}},
    {"t": [[1, 0], [0, 2]],
     "z0": {"real": [[0.3, 0.1], [0.1, 0.3]], "imag": [[1.1, 0.2], [0.2, 1.1]]}},
    {"t": [[1, "1/2"], ["1/2", 1]],
     "z0": {"real": [[-0.2, 0.15], [0.15, 0.4]], "imag": [[0.9, 0.1], [0.1, 0.8]]}},
]


def default_config_dir() -> Path:
    env = os.environ.get(CONFIG_DIR_ENV)
    return Path(env) if env else BASE_DIR / "config"


class ConfigLoader:
    """Loads and validates vvgamma configuration files."""

    def __init__(self, config_dir: Optional[str] = None, schemas_dir: Optional[str] = None):
        """Initialize loader.

        Args:
            config_dir: Configuration directory. Defaults to $VVGAMMA_CONFIG_DIR,
                        then 'config/' relative to this script.
            schemas_dir: Schema directory. Defaults to 'schemas/'.
        """
        self.config_dir = Path(config_dir) if config_dir else default_config_dir()
        self.schemas_dir = Path(schemas_dir) if schemas_dir else SCHEMAS_DIR
        self._cache: Dict[str, Dict] = {}

    def _load_schema(self, name: str) -> Optional[Dict]:
        schema_path = self.schemas_dir / f"{name}.schema.json"
        if not schema_path.exists():
            logger.warning("Schema file not found at %s; skipping validation", schema_path)
            return None
        with open(schema_path, "r", encoding="utf-8") as f:
            return json.load(f)

    def load(self, name: str, validate: bool = True) -> Optional[Dict]:
        """Load config/<name>.json, or None when the file does not exist.

        Raises:
            json.JSONDecodeError: If the file is not valid JSON
            jsonschema.ValidationError: If the file fails schema validation
        """
        if name in self._cache:
            return self._cache[name]

        path = self.config_dir / f"{name}.json"
        if not path.exists():
            logger.debug("No %s configuration at %s; using defaults", name, path)
            return None

        with open(path, "r", encoding="utf-8") as f:
            data = json.load(f)

        if validate:
            schema = self._load_schema(name)
            if schema:
                jsonschema.validate(data, schema)

        self._cache[name] = data
        return data

    def validate_file(self, path: str) -> bool:
        """Validate a configuration file against the schema matching its file name."""
        path = Path(path)
        try:
            with open(path, "r", encoding="utf-8") as f:
                data = json.load(f)
            schema = self._load_schema(path.stem)
            if schema:
                jsonschema.Draft7Validator(schema).validate(data)
            return True
        except json.JSONDecodeError as e:
            logger.error("Invalid JSON in %s: %s", path, e)
            return False
        except jsonschema.ValidationError as e:
            logger.error("Schema validation failed for %s: %s", path, e.message)
            return False
        except OSError as e:
            logger.error("Cannot read %s: %s", path, e)
            return False

    def list_configs(self) -> List[str]:
        if not self.config_dir.exists():
            return []
        return sorted(f.stem for f in self.config_dir.glob("*.json"))

    def quadrature_spec(self) -> QuadratureSpec:
        data = self.load("quadrature")
        return QuadratureSpec.from_dict(data) if data else QuadratureSpec()

    def maass_samples(self) -> List[Tuple[np.ndarray, np.ndarray]]:
        """(T, Z0) pairs with T exact-valued floats and Z0 complex."""
        data = self.load("maass_samples")
        samples = data["samples"] if data else DEFAULT_MAASS_SAMPLES
        return [parse_sample(sample) for sample in samples]


def _entry(value) -> float:
    if isinstance(value, str):
        return float(as_rational(value, "matrix entry"))
    return float(value)


def parse_matrix(rows, context: str = "matrix") -> np.ndarray:
    m = np.array([[_entry(v) for v in row] for row in rows], dtype=float)
    if m.shape != (2, 2):
        raise ValueError(f"{context} must be 2x2; got shape {m.shape}")
    if m[0, 1] != m[1, 0]:
        raise ValueError(f"{context} must be symmetric; got {m.tolist()}")
    return m


def parse_sample(sample: Dict[str, Any]) -> Tuple[np.ndarray, np.ndarray]:
    t = parse_matrix(sample["t"], "T")
    if np.any(np.linalg.eigvalsh(t) <= 0):
        raise ValueError(f"T must be positive definite; got {t.tolist()}")
    z0 = parse_matrix(sample["z0"]["real"], "Re Z0") + 1j * parse_matrix(sample["z0"]["imag"], "Im Z0")
    return t, z0


def main():
    """CLI entry point for the configuration loader."""
    parser = argparse.ArgumentParser(description="Load and validate vvgamma configuration files")
    parser.add_argument("--list", "-l", action="store_true", help="List configuration files")
    parser.add_argument("--validate", "-v", type=str, metavar="FILE",
                        help="Validate a configuration file against its schema")
    parser.add_argument("--config-dir", "-d", type=str, help="Configuration directory path")
    args = parser.parse_args()

    logging.basicConfig(level=logging.INFO, format="%(asctime)s - %(levelname)s - %(message)s")
    loader = ConfigLoader(args.config_dir)

    if args.list:
        names = loader.list_configs()
        if not names:
            print("No configuration files found.")
            return 0
        print("Available configuration files:")
        for name in names:
            try:
                loader.load(name)
                print(f"  {name}: ok")
            except (json.JSONDecodeError, jsonschema.ValidationError) as e:
                print(f"  {name}: (error loading: {e})")
        return 0

    if args.validate:
        print(f"Validating: {args.validate}")
        if loader.validate_file(args.validate):
            print("✅ Configuration is valid")
            return 0
        print("❌ Configuration validation failed")
        return 1

    parser.print_help()
    return 0


if __name__ == "__main__":
    sys.exit(main())
