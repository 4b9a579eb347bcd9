"""
config.py
---------

This module defines configuration classes for the C∥ toolchain based on the
environment.

Classes:
    - Config: Base configuration common to all environments.
    - DevelopmentConfig: Configuration for development.
    - TestingConfig: Configuration for testing.
    - StagingConfig: Configuration for staging.
    - ProductionConfig: Configuration for production.

The engine and explorer defaults (step bound, schedule and state bounds,
granularity) are read from the environment so that both the CLI and the HTTP
service pick up the same values from `.env.*` files.
"""

import os


def _positive_int(name, default):
    """Read a positive integer from the environment."""
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        value = 0
    if value <= 0:
        raise ValueError(f"{name} must be a positive integer, got {raw!r}.")
    return value


class Config:
    """Base configuration common to all environments."""
    SECRET_KEY = os.environ.get('SECRET_KEY', 'dev')
    DEBUG = False
    TESTING = False
    CPAR_MAX_STEPS = _positive_int('CPAR_MAX_STEPS', 10000)
    CPAR_MAX_SCHEDULES = _positive_int('CPAR_MAX_SCHEDULES', 100000)
    CPAR_MAX_STATES = _positive_int('CPAR_MAX_STATES', 1000000)
    CPAR_GRANULARITY = os.environ.get('CPAR_GRANULARITY', 'fine').lower()
    if CPAR_GRANULARITY not in ('fine', 'literal'):
        raise ValueError("CPAR_GRANULARITY must be 'fine' or 'literal'.")


class DevelopmentConfig(Config):
    """Configuration for the development environment."""
    DEBUG = True


class TestingConfig(Config):
    """Configuration for the testing environment."""
    TESTING = True


class StagingConfig(Config):
    """Configuration for the staging environment."""
    DEBUG = True


class ProductionConfig(Config):
    """Configuration for the production environment."""
    DEBUG = False


CONFIG_CLASSES = {
    'production': 'app.config.ProductionConfig',
    'staging': 'app.config.StagingConfig',
    'testing': 'app.config.TestingConfig',
    'development': 'app.config.DevelopmentConfig',
}


def config_class_for(env):
    """
    Return the import path of the configuration class for an environment.

    Args:
        env (str): Environment name; unknown names fall back to development.

    Returns:
        str: Dotted path of the configuration class.
    """
    return CONFIG_CLASSES.get(env, CONFIG_CLASSES['development'])


def engine_defaults(config_class=Config):
    """
    Engine and explorer defaults of a configuration class as a mapping, the
    same shape as a Flask `app.config`.
    """
    return {
        key: getattr(config_class, key)
        for key in dir(config_class) if key.startswith('CPAR_')
    }
