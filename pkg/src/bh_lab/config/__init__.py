from bh_lab.config.settings import SETTINGS, Settings

__all__ = [
    "SETTINGS",
    "Settings",
]
