from typing import Generic, Self, TypeVar

from pydantic_settings import (
    BaseSettings,
    PydanticBaseSettingsSource,
    PyprojectTomlConfigSettingsSource,
    SettingsConfigDict,
    TomlConfigSettingsSource,
)

from ablp.configs.config_template import (
    BenchConfig,
    EngineConfig,
    LoggingConfig,
    OracleConfig,
    TableStoreConfig,
    TransformConfig,
)

R = TypeVar("R")  # Runtime Config


class BaseConfig(BaseSettings, Generic[R]):
    """Base configuration class of the toolchain.

    Settings are loaded from, in priority order, the ``[tool.configs]`` table of
    ``pyproject.toml``, a ``configs.toml`` file, ``ABLP_``-prefixed environment
    variables (nested sections separated by ``__``), a ``.env`` file and the field
    defaults. A single instance is installed process-wide with :meth:`set_global`.

    Attributes:
        ENGINE (EngineConfig): Resolution engine settings.
        TRANSFORM (TransformConfig): Default transformation options.
        TABLE_STORE (TableStoreConfig): Table-memory cost model constants.
        ORACLE (OracleConfig): Brute-force oracle limits.
        BENCH (BenchConfig): Benchmark and random generator settings.
        LOGGING (LoggingConfig): Root logger settings.
        MAX_STEPS (int | None): Shortcut for ``ENGINE.MAX_STEPS`` read from ``ABLP_MAX_STEPS``.

    Examples:
        >>> from ablp.configs.base_config import BaseConfig
        >>>
        >>> config = BaseConfig()
        >>> BaseConfig.set_global(config)
        >>> BaseConfig.global_config().ENGINE.MAX_STEPS
        10000000
    """

    model_config = SettingsConfigDict(
        case_sensitive=True,
        pyproject_toml_depth=3,
        env_file=".env",
        env_prefix="ABLP_",
        pyproject_toml_table_header=("tool", "configs"),
        extra="ignore",
        env_nested_delimiter="__",
        env_ignore_empty=True,
    )

    __global_config: Self | None = None

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls: type[BaseSettings],
        init_settings: PydanticBaseSettingsSource,
        env_settings: PydanticBaseSettingsSource,
        dotenv_settings: PydanticBaseSettingsSource,
        file_secret_settings: PydanticBaseSettingsSource,
    ) -> tuple[PydanticBaseSettingsSource, ...]:
        """Orders the sources; earlier sources win over later ones."""
        return (
            file_secret_settings,
            PyprojectTomlConfigSettingsSource(settings_cls),
            TomlConfigSettingsSource(settings_cls),
            env_settings,
            dotenv_settings,
            init_settings,
        )

    ENGINE: EngineConfig = EngineConfig()
    TRANSFORM: TransformConfig = TransformConfig()
    TABLE_STORE: TableStoreConfig = TableStoreConfig()
    ORACLE: OracleConfig = OracleConfig()
    BENCH: BenchConfig = BenchConfig()
    LOGGING: LoggingConfig = LoggingConfig()
    MAX_STEPS: int | None = None

    def customize(self) -> None:
        """Folds ``MAX_STEPS`` (``ABLP_MAX_STEPS``) into ``ENGINE.MAX_STEPS``."""
        if self.MAX_STEPS is not None:
            self.ENGINE = EngineConfig(MAX_STEPS=self.MAX_STEPS, DEFAULT_SUBSUMPTION=self.ENGINE.DEFAULT_SUBSUMPTION)

    @classmethod
    def global_config(cls) -> Self:
        """Returns the configuration installed by :meth:`set_global`.

        Raises:
            AssertionError: If no configuration has been installed yet.
        """
        if cls.__global_config is None:
            raise AssertionError("You should set global configs with BaseConfig.set_global(MyConfig())")
        return cls.__global_config  # type: ignore[no-any-return]

    @classmethod
    def set_global(cls, config: R) -> None:
        """Applies :meth:`customize` to ``config`` and installs it process-wide."""
        if callable(getattr(config, "customize", None)):
            config.customize()  # type: ignore[attr-defined]
        cls.__global_config = config
