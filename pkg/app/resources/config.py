"""
config.py
---------

This module defines the ConfigResource exposing the engine and explorer
defaults the service runs with.
"""

import os
from flask import current_app
from flask_restful import Resource


class ConfigResource(Resource):
    """
    Resource for providing the effective configuration.

    Methods:
        get():
            Retrieve the environment name and engine/explorer defaults.
    """

    def get(self):
        """
        Retrieve the current configuration.

        Returns:
            dict: Configuration values and HTTP status code 200.
        """
        config = current_app.config
        return {
            "FLASK_ENV": os.getenv("FLASK_ENV"),
            "DEBUG": config.get("DEBUG"),
            "CPAR_MAX_STEPS": config.get("CPAR_MAX_STEPS"),
            "CPAR_MAX_SCHEDULES": config.get("CPAR_MAX_SCHEDULES"),
            "CPAR_MAX_STATES": config.get("CPAR_MAX_STATES"),
            "CPAR_GRANULARITY": config.get("CPAR_GRANULARITY"),
        }, 200
