"""
wsgi.py
-------

WSGI entry point for deploying the C∥ HTTP service, e.g.
`gunicorn wsgi:app`.

This script:
    - Detects the current environment from CPAR_ENV or FLASK_ENV.
    - Loads the matching .env file before the configuration is read.
    - Creates the Flask application instance as 'app' for the WSGI server.
"""

import os
from dotenv import load_dotenv

ENV_FILES = {
    'production': '.env.production',
    'staging': '.env.staging',
    'testing': '.env.test',
}

env = os.environ.get('CPAR_ENV') or os.environ.get('FLASK_ENV', 'development')
load_dotenv(ENV_FILES.get(env, '.env.development'))

# pylint: disable=wrong-import-position
from app import create_app  # noqa: E402
from app.config import config_class_for  # noqa: E402

app = create_app(config_class_for(env))
