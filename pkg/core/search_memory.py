"""Per-search memory: failed frontier states, dead ends and counters."""
from datetime import datetime
from typing import Dict, Hashable, List, Tuple

from core.witness import DeadEnd


class SearchMemoryService:
    """Keeps the bookkeeping of one decision search per session."""

    def __init__(self, memoize: bool = True):
        self.memoize = memoize
        self.sessions: Dict[str, dict] = {}
        self._counter = 0

    def create_session(self, label: str) -> str:
        """Open a fresh search session and return its id."""
        self._counter += 1
        session_id = f"{label}#{self._counter}"
        self.sessions[session_id] = {
            "label": label,
            "created_at": datetime.now().isoformat(),
            "failed_states": set(),
            "dead_ends": {},
            "nodes": 0,
            "memo_hits": 0,
            "frontier": -1,
        }
        return session_id

    def close_session(self, session_id: str) -> None:
        self.sessions.pop(session_id, None)

    def record_node(self, session_id: str, position: int) -> None:
        session = self.sessions[session_id]
        session["nodes"] += 1
        session["frontier"] = max(session["frontier"], position)

    def remember_failure(self, session_id: str, state: Hashable) -> None:
        if self.memoize:
            self.sessions[session_id]["failed_states"].add(state)

    def has_failed(self, session_id: str, state: Hashable) -> bool:
        if not self.memoize:
            return False
        session = self.sessions[session_id]
        if state in session["failed_states"]:
            session["memo_hits"] += 1
            return True
        return False

    def add_dead_end(self, session_id: str, position: int, dead_end: DeadEnd) -> None:
        self.sessions[session_id]["dead_ends"].setdefault(position, []).append(dead_end)

    def get_frontier(self, session_id: str) -> int:
        """Furthest position in visit order that any branch reached."""
        return self.sessions[session_id]["frontier"]

    def get_dead_ends(self, session_id: str, position: int) -> List[DeadEnd]:
        return list(self.sessions[session_id]["dead_ends"].get(position, []))

    def get_session_stats(self, session_id: str) -> Tuple[int, int]:
        session = self.sessions[session_id]
        return session["nodes"], session["memo_hits"]
