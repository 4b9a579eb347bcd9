"""
app.resources
-------------

flask-restful resources of the C∥ HTTP service.
"""
