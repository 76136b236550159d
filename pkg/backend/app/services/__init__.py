"""
Service layer for the application.
This layer runs verification sweeps on top of the algorithms in app.descents.
"""
