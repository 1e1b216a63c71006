from pydantic_settings import BaseSettings, SettingsConfigDict

class Settings(BaseSettings):
    # Prueba de simplicidad
    DEFAULT_CAP: int = 1_000_000
    DEFAULT_THREADS: int = 1
    SIMPLE_BATCH_SIZE: int = 256

    # Catálogo
    MAX_MATRIX_SIZE: int = 16

    # Logging
    LOG_LEVEL: str = "WARNING"

    # HTTP
    CORS_ORIGINS: str = "*"

    model_config = SettingsConfigDict(env_file=".env", env_prefix="LIE_IDEAL_", extra="ignore")

settings = Settings()
