"""Engine settings - size bounds and parallelism for the encoder, solver and cohomology"""
import json
import os
from dataclasses import asdict, dataclass, fields
from pathlib import Path
from typing import Optional

from ..utils.error_logger import get_logger, grpmat_home

THREADS_ENV = 'GRPMAT_THREADS'
SETTINGS_FILE = 'settings.json'


@dataclass
class EngineSettings:
    """
    Tunable bounds for the desk-scale computations

    Attributes:
        size_limit: Maximum unknowns m^2 + n^2 of the intertwiner system
        degree_limit: Largest degree accepted by monomial_basis
        sullivan_max_order: Largest group order for cohomology slices
        canonical_max_order: Largest group order for canonical search
        threads: Worker threads for canonical search (never changes results)
        emit_x: Include X matrices in solver reports
    """
    size_limit: int = 10000
    degree_limit: int = 200
    sullivan_max_order: int = 4
    canonical_max_order: int = 8
    threads: int = 1
    emit_x: bool = False

    def __post_init__(self):
        """Validate settings after initialization"""
        for name in ('size_limit', 'degree_limit', 'sullivan_max_order', 'canonical_max_order', 'threads'):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int) or value < 1:
                raise ValueError(f"{name} must be a positive integer, got {value!r}")
        if not isinstance(self.emit_x, bool):
            raise ValueError(f"emit_x must be true or false, got {self.emit_x!r}")

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> 'EngineSettings':
        """
        Create settings from a dictionary

        Args:
            data: Field values; unknown keys are rejected

        Returns:
            EngineSettings instance

        Raises:
            ValueError: On unknown keys or invalid values
        """
        known = {f.name for f in fields(cls)}
        unknown = sorted(set(data) - known)
        if unknown:
            raise ValueError(f"Unknown setting(s): {', '.join(unknown)}")
        return cls(**data)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_json(cls, json_str: str) -> 'EngineSettings':
        return cls.from_dict(json.loads(json_str))


def load_settings(path: Optional[str] = None) -> EngineSettings:
    """
    Load settings from JSON and apply the GRPMAT_THREADS override

    Args:
        path: Settings file; defaults to <home>/settings.json when it exists

    Returns:
        EngineSettings

    Raises:
        FileNotFoundError: If an explicit path does not exist
        ValueError: If the file cannot be parsed
    """
    logger = get_logger()
    settings_path = Path(path) if path else grpmat_home() / SETTINGS_FILE

    if path or settings_path.exists():
        try:
            settings = EngineSettings.from_json(settings_path.read_text(encoding='utf-8'))
            logger.log_debug(f"Settings loaded from {settings_path}", 'settings')
        except FileNotFoundError:
            raise FileNotFoundError(f"File not found: {settings_path}")
        except Exception as e:
            raise ValueError(f"Error loading settings: {str(e)}")
    else:
        settings = EngineSettings()

    raw = os.environ.get(THREADS_ENV)
    if raw:
        try:
            threads = int(raw)
            if threads < 1:
                raise ValueError(raw)
            settings.threads = threads
        except ValueError:
            logger.log_warning(f"Ignoring {THREADS_ENV}={raw!r}: expected a positive integer", 'settings')
    return settings
