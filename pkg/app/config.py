from typing import List, Union
import json
from pydantic_settings import BaseSettings
from pydantic import field_validator
from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()

class Settings(BaseSettings):
    # Application Settings
    APP_NAME: str = "hochster-lc - Local Cohomology of Monomial Ideals"
    DEBUG: bool = False
    HOST: str = "0.0.0.0"
    PORT: int = 8000
    LOG_LEVEL: str = "INFO"

    # CORS for the HTTP surface
    ALLOWED_ORIGINS: Union[List[str], str] = "*"

    @field_validator('ALLOWED_ORIGINS', mode='before')
    @classmethod
    def parse_allowed_origins(cls, v):
        if isinstance(v, str):
            if v == "*":
                return ["*"]
            try:
                return json.loads(v)
            except json.JSONDecodeError:
                return [origin.strip() for origin in v.split(',')]
        return v

    # Coefficient field: "q" for the rationals, "gf:<p>" for a prime field
    DEFAULT_FIELD: str = "q"

    @field_validator('DEFAULT_FIELD', mode='before')
    @classmethod
    def parse_default_field(cls, v):
        if isinstance(v, str):
            value = v.strip().lower()
            if value == "q":
                return value
            if value.startswith("gf:") and value[3:].isdigit():
                return value
        raise ValueError(f"DEFAULT_FIELD must be 'q' or 'gf:<p>', got {v!r}")

    # Worker threads for representative degrees, corpora and searches
    PARALLEL: int = 1

    # k-Buchsbaum search cap = sum(rho) - n + 1 + margin
    K_INDEX_MARGIN: int = 2

    # Exponent search defaults
    SEARCH_BOUND: int = 3
    SEARCH_TUPLES: int = 1

    # Random corpus defaults
    CORPUS_COUNT: int = 50
    CORPUS_MAX_VARS: int = 5
    CORPUS_MAX_RHO: int = 3
    CORPUS_MAX_GENS: int = 8
    CORPUS_SEED: int = 0

    # Raise TheoremViolation on failed bound checks instead of only reporting
    VERIFY_THEOREMS: bool = True

    model_config = {
        "env_file": ".env",
        "case_sensitive": True,
        "extra": "allow"
    }

settings = Settings()
