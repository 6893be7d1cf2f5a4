"""
Version Module

Single source of truth for app version metadata.
"""

APP_NAME: str = "Discussive Lab"
APP_VERSION: str = "0.3.0"
