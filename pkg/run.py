"""
run.py
------

Entry point for running the C∥ HTTP service in development.

This script:
    - Detects the current environment from CPAR_ENV or FLASK_ENV.
    - Loads the matching .env file before the configuration is read.
    - Selects the configuration class for the Flask app.
    - Creates the Flask application instance.
    - Runs the application if executed as the main module.
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

if __name__ == '__main__':
    app.run(host='0.0.0.0', debug=app.config['DEBUG'])
