"""
conftest.py
-----------
Fixtures and configuration for the C∥ toolchain test suite.
"""

import os
from pathlib import Path

import pytest
from dotenv import load_dotenv

from app import create_app
from app.syntax import parse_program

# Test environment
os.environ['FLASK_ENV'] = 'testing'
load_dotenv(dotenv_path=os.path.join(os.path.dirname(__file__), '..', '.env.test'))

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def app():
    """
    Create and configure the Flask application for the tests.
    """
    application = create_app('app.config.TestingConfig')
    with application.app_context():
        yield application


@pytest.fixture
def client(app):
    """
    Provide a Flask client for HTTP test requests.
    """
    return app.test_client()


@pytest.fixture
def fixture_path():
    """
    Return the path of a `.cpar` file of the fixture corpus.
    """
    def _path(name):
        return str(FIXTURES / name)
    return _path


@pytest.fixture
def source():
    """
    Return the text of a `.cpar` file of the fixture corpus.
    """
    def _source(name):
        return (FIXTURES / name).read_text(encoding="utf-8")
    return _source


@pytest.fixture
def program(source):
    """
    Parse a `.cpar` file of the fixture corpus.
    """
    def _program(name):
        return parse_program(source(name))
    return _program
