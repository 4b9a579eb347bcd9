"""
version.py
----------

This module defines the VersionResource for exposing the current version of
the C∥ toolchain through a REST endpoint.
"""
from flask_restful import Resource

API_VERSION = "0.1.0"


class VersionResource(Resource):
    """
    Resource for providing the toolchain version.

    Methods:
        get():
            Retrieve the current version.
    """

    def get(self):
        """
        Retrieve the current version.

        Returns:
            dict: A dictionary containing the version and HTTP status
            code 200.
        """
        return {"version": API_VERSION}, 200
