"""Configuration file loading and management"""

from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, Optional

import yaml

from condlint.common.errors import ConfigError

VALID_FORMATS: tuple[str, ...] = ("json", "csv", "markdown", "text")
VALID_PREVALENCE_BASES: tuple[str, ...] = ("occurrence", "submission")
DEFAULT_LAYOUT: str = "{group}/{student}/*.py"
DEFAULT_LOG_FORMAT: str = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


@dataclass
class CheckConfig:
    """Settings for single-file checks"""

    patterns: list[str] = field(default_factory=list)  # empty means all fifteen
    format: Optional[str] = None  # None selects text on a terminal, json otherwise
    suggestions: bool = True
    skip_invalid: bool = False
    workers: int = 1
    python_version: str = "3"


@dataclass
class CorpusConfig:
    """Settings for corpus runs"""

    layout: str = DEFAULT_LAYOUT
    skip_invalid: bool = True
    prevalence_basis: str = "occurrence"
    out: Optional[str] = None
    workers: int = 1


@dataclass
class LoggingConfig:
    """Logging configuration settings"""

    level: str = "WARNING"
    file: Optional[str] = None
    format: str = DEFAULT_LOG_FORMAT


@dataclass
class Config:
    """Complete application configuration"""

    check: CheckConfig = field(default_factory=CheckConfig)
    corpus: CorpusConfig = field(default_factory=CorpusConfig)
    logging: LoggingConfig = field(default_factory=LoggingConfig)


class ConfigLoader:
    """Loads and parses configuration from YAML files"""

    DEFAULT_CONFIG_PATHS = [
        "condlint.yml",
        "~/.config/condlint/condlint.yml",
        "/etc/condlint/condlint.yml",
    ]

    @staticmethod
    def configFile_find() -> Optional[Path]:
        """
        Find configuration file in standard locations

        Returns:
            Path to config file or None.
        """
        for config_path in ConfigLoader.DEFAULT_CONFIG_PATHS:
            path = Path(config_path).expanduser().resolve()
            if path.exists() and path.is_file():
                return path
        return None

    @staticmethod
    def yaml_load(file_path: Path) -> Dict[str, Any]:
        """
        Load YAML configuration file

        Args:
            file_path: Path to YAML file

        Returns:
            Parsed configuration dictionary

        Raises:
            FileNotFoundError: If file does not exist
            yaml.YAMLError: If file is not valid YAML
            ValueError: If the document is not a mapping
        """
        with open(file_path, "r", encoding="utf-8") as f:
            data = yaml.safe_load(f)

        if data is None:
            return {}
        if not isinstance(data, dict):
            raise ValueError(f"Config file {file_path} must contain a YAML dictionary")

        return data

    @staticmethod
    def config_parse(data: Dict[str, Any]) -> Config:
        """
        Parse configuration dictionary into Config object

        Missing sections and keys fall back to defaults.

        Args:
            data: Raw configuration dictionary

        Returns:
            Parsed Config object

        Raises:
            ConfigError: If a value is of the wrong kind or out of range
        """
        check_data: Dict[str, Any] = ConfigLoader._section_get(data, "check")
        patterns_data = check_data.get("patterns", [])
        if isinstance(patterns_data, str):
            # Comma list, same spelling as the --patterns flag
            patterns_data = [part.strip() for part in patterns_data.split(",") if part.strip()]
        if not isinstance(patterns_data, list):
            raise ConfigError("check.patterns must be a list or a comma separated string")

        check = CheckConfig(
            patterns=[str(pattern) for pattern in patterns_data],
            format=ConfigLoader._format_check(check_data.get("format")),
            suggestions=bool(check_data.get("suggestions", True)),
            skip_invalid=bool(check_data.get("skip_invalid", False)),
            workers=ConfigLoader._workers_check(check_data.get("workers", 1), "check.workers"),
            python_version=str(check_data.get("python_version", "3")),
        )

        corpus_data: Dict[str, Any] = ConfigLoader._section_get(data, "corpus")
        basis: str = str(corpus_data.get("prevalence_basis", "occurrence")).lower()
        if basis not in VALID_PREVALENCE_BASES:
            raise ConfigError(
                f"corpus.prevalence_basis must be one of {', '.join(VALID_PREVALENCE_BASES)}, "
                f"got '{basis}'"
            )
        corpus = CorpusConfig(
            layout=str(corpus_data.get("layout", DEFAULT_LAYOUT)),
            skip_invalid=bool(corpus_data.get("skip_invalid", True)),
            prevalence_basis=basis,
            out=corpus_data.get("out"),
            workers=ConfigLoader._workers_check(corpus_data.get("workers", 1), "corpus.workers"),
        )

        logging_data: Dict[str, Any] = ConfigLoader._section_get(data, "logging")
        logging = LoggingConfig(
            level=str(logging_data.get("level", "WARNING")).upper(),
            file=logging_data.get("file"),
            format=str(logging_data.get("format", DEFAULT_LOG_FORMAT)),
        )

        return Config(check=check, corpus=corpus, logging=logging)

    @staticmethod
    def config_load(file_path: Optional[Path] = None) -> Config:
        """
        Load configuration from file

        Args:
            file_path: Optional path to config file. If None, searches standard locations
                and returns defaults when nothing is found.

        Returns:
            Parsed Config object

        Raises:
            FileNotFoundError: If an explicit config file does not exist
            ConfigError: If config file is invalid
        """
        if file_path is None:
            file_path = ConfigLoader.configFile_find()
            if file_path is None:
                return Config()

        data = ConfigLoader.yaml_load(file_path)
        return ConfigLoader.config_parse(data)

    @staticmethod
    def configWithOverrides_load(file_path: Optional[Path] = None, **overrides: Any) -> Config:
        """
        Load configuration and apply command-line overrides

        Args:
            file_path: Optional path to config file
            overrides: Flag values; None means "not given on the command line".

        Returns:
            Config object with overrides applied

        Example:
            config = ConfigLoader.configWithOverrides_load(
                format="json",
                layout="{group}/{student}.py",
            )
        """
        config = ConfigLoader.config_load(file_path)

        if overrides.get("patterns") is not None:
            config.check.patterns = list(overrides["patterns"])
        if overrides.get("format") is not None:
            config.check.format = ConfigLoader._format_check(overrides["format"])
        if overrides.get("suggestions") is not None:
            config.check.suggestions = bool(overrides["suggestions"])
        if overrides.get("workers") is not None:
            workers = ConfigLoader._workers_check(overrides["workers"], "--workers")
            config.check.workers = workers
            config.corpus.workers = workers
        if overrides.get("layout") is not None:
            config.corpus.layout = overrides["layout"]
        if overrides.get("skip_invalid") is not None:
            config.check.skip_invalid = bool(overrides["skip_invalid"])
            config.corpus.skip_invalid = bool(overrides["skip_invalid"])
        if overrides.get("prevalence_basis") is not None:
            config.corpus.prevalence_basis = overrides["prevalence_basis"]
        if overrides.get("out") is not None:
            config.corpus.out = overrides["out"]
        if overrides.get("log_level") is not None:
            config.logging.level = str(overrides["log_level"]).upper()

        return config

    @staticmethod
    def _section_get(data: Dict[str, Any], name: str) -> Dict[str, Any]:
        """
        Fetch an optional mapping section

        Args:
            data: Raw configuration dictionary.
            name: Section key.

        Returns:
            Section mapping, empty when absent.
        """
        section = data.get(name) or {}
        if not isinstance(section, dict):
            raise ConfigError(f"config section '{name}' must be a mapping")
        return section

    @staticmethod
    def _format_check(value: Any) -> Optional[str]:
        """
        Validate a report format name

        Args:
            value: Raw value, None for automatic selection.

        Returns:
            Lower-case format name or None.
        """
        if value is None:
            return None
        name = str(value).lower()
        if name not in VALID_FORMATS:
            raise ConfigError(f"format must be one of {', '.join(VALID_FORMATS)}, got '{value}'")
        return name

    @staticmethod
    def _workers_check(value: Any, where: str) -> int:
        """
        Validate a worker count

        Args:
            value: Raw value.
            where: Name used in the error message.

        Returns:
            Worker count of at least 1.
        """
        try:
            workers = int(value)
        except (TypeError, ValueError) as exc:
            raise ConfigError(f"{where} must be an integer, got {value!r}") from exc
        if workers < 1:
            raise ConfigError(f"{where} must be at least 1, got {workers}")
        return workers
