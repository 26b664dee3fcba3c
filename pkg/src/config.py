from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    PROJECT_NAME: str = "Fair Coalition"
    VERSION: str = "0.1.0"

    LOG_LEVEL: str = "INFO"

    # Exact solver
    SOLVER_ORDER_CAP: int = 14
    SOLVER_NODE_BUDGET: int = 10 ** 8
    SOLVER_WORKERS: int = 1

    # Naive oracle (Bell(10) ~ 1.16e5 partitions); never raised above 10
    ORACLE_ORDER_CAP: int = 10

    # Verification
    VERIFY_MAX_ORDER: int = 10
    CENSUS_PROGRESS: bool = False

    model_config = SettingsConfigDict(case_sensitive=True, env_file=".env")


ORACLE_HARD_CAP = 10

settings = Settings()
