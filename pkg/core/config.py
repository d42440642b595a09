from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    PROJECT_NAME: str = "superder"

    # Solver limits
    SUPERDER_MAX_DIM: int = 40
    DEFAULT_SEED: int = 20240601
    DEFAULT_JOBS: int = 1

    # Redis Configuration
    REDIS_URL: str = "redis://localhost:6379/0"

    # Celery Configuration - Use REDIS_URL for both broker and backend
    CELERY_BROKER_URL: str = ""
    CELERY_RESULT_BACKEND: str = ""
    USE_CELERY: bool = False
    CELERY_TASK_ALWAYS_EAGER: bool = False

    def __init__(self, **kwargs):
        super().__init__(**kwargs)
        # Set Celery URLs from REDIS_URL if not explicitly provided
        if not self.CELERY_BROKER_URL:
            self.CELERY_BROKER_URL = self.REDIS_URL
        if not self.CELERY_RESULT_BACKEND:
            self.CELERY_RESULT_BACKEND = self.REDIS_URL

    # Logging Configuration
    LOG_LEVEL: str = "WARNING"
    JSON_LOGS: bool = False
    LOG_TO_CONSOLE: bool = True

    model_config = SettingsConfigDict(env_file=".env", case_sensitive=True, extra="ignore")


settings = Settings()
