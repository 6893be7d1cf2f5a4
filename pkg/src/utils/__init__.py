# Utility Module
from .atomic_write import atomic_save_workbook, atomic_write_json, atomic_write_text
from .logger import LogCapture, get_logger, setup_logger
from .settings import AppSettings, SettingsManager, get_settings_manager

__all__ = [
    'AppSettings',
    'atomic_save_workbook',
    'atomic_write_json',
    'atomic_write_text',
    'get_logger',
    'get_settings_manager',
    'LogCapture',
    'SettingsManager',
    'setup_logger',
]
