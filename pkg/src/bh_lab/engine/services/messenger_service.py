from __future__ import annotations

import logging
from typing import Dict, List, Optional

from bh_lab.config import SETTINGS

logger = logging.getLogger(__name__)

_LEVELS = {
    "debug": logging.DEBUG,
    "info": logging.INFO,
    "warn": logging.WARNING,
    "error": logging.ERROR,
}


class MessengerService:
    """Bounded log of campaign messages.

    Stores structured entries, each a dict:
      {"level": str, "text": str, "tag": str, "ctx": dict}
    Every entry is also forwarded to the ``bh_lab`` logger. Entries carry no
    timestamps, so two identical runs keep identical message lists.
    """

    def __init__(self, limit: Optional[int] = None):
        self.limit = int(limit if limit is not None else SETTINGS.log.messages_limit)
        self.messages: List[Dict] = []

    # --- Public API ---
    def append(self, text: str, level: str = "info", tag: Optional[str] = None, ctx: Optional[Dict] = None) -> Dict:
        entry = {
            "level": str(level or "info"),
            "text": str(text),
            "tag": str(tag or ""),
            "ctx": dict(ctx or {}),
        }
        logger.log(_LEVELS.get(entry["level"], logging.INFO), "[%s] %s", entry["tag"], entry["text"])
        self.messages.append(entry)
        # keep the newest `limit` entries
        if len(self.messages) > self.limit:
            self.messages = self.messages[-self.limit:]
        return entry

    def info(self, text: str, tag: Optional[str] = None, ctx: Optional[Dict] = None) -> Dict:
        return self.append(text, level="info", tag=tag, ctx=ctx)

    def debug(self, text: str, tag: Optional[str] = None, ctx: Optional[Dict] = None) -> Dict:
        return self.append(text, level="debug", tag=tag, ctx=ctx)

    def warn(self, text: str, tag: Optional[str] = None, ctx: Optional[Dict] = None) -> Dict:
        return self.append(text, level="warn", tag=tag, ctx=ctx)

    def error(self, text: str, tag: Optional[str] = None, ctx: Optional[Dict] = None) -> Dict:
        return self.append(text, level="error", tag=tag, ctx=ctx)

    def get_entries(self, limit: Optional[int] = None, level: Optional[str] = None) -> List[Dict]:
        msgs = [m for m in self.messages if level is None or m["level"] == level]
        if limit is None:
            return list(msgs)
        return list(msgs[-int(limit):])

    def clear(self) -> None:
        self.messages = []
