"""Editable text buffer with stable offset/line conventions.

Offsets are 0-based character positions. Line numbers are 1-based, columns
0-based. Text is held LF-normalized; the original newline flavour is
remembered so a round-trip through :meth:`TextBuffer.to_bytes` preserves it.

Every mutation bumps a revision counter and appends to a bounded edit log so
downstream caches (scan-state checkpoints, indent memos) can invalidate only
what an edit could have touched.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass

MAX_EDIT_LOG = 128


@dataclass(frozen=True)
class Edit:
    """A single replacement: ``old_len`` chars at ``start`` became ``new_len``."""

    revision: int
    start: int
    old_len: int
    new_len: int


class TextBuffer:
    def __init__(self, text: str = "", newline: str = "\n") -> None:
        if newline not in ("\n", "\r\n"):
            raise ValueError(f"unsupported newline style: {newline!r}")
        self._text = text.replace("\r\n", "\n")
        self._newline = newline
        self._revision = 0
        self._edits: list[Edit] = []
        self._log_floor = 0  # oldest revision still reconstructable from the log
        self._line_starts: list[int] | None = None

    @classmethod
    def from_string(cls, text: str) -> TextBuffer:
        newline = "\r\n" if "\r\n" in text else "\n"
        return cls(text, newline=newline)

    @classmethod
    def from_file(cls, path: str) -> TextBuffer:
        with open(path, encoding="utf-8") as fh:
            return cls.from_string(fh.read())

    # -- queries ---------------------------------------------------------

    @property
    def revision(self) -> int:
        return self._revision

    @property
    def text(self) -> str:
        return self._text

    @property
    def newline(self) -> str:
        return self._newline

    def __len__(self) -> int:
        return len(self._text)

    def char_at(self, pos: int) -> str:
        """Character at ``pos``, or '' at end of buffer."""
        if 0 <= pos < len(self._text):
            return self._text[pos]
        return ""

    def slice(self, start: int, end: int) -> str:
        return self._text[start:end]

    def _starts(self) -> list[int]:
        if self._line_starts is None:
            starts = [0]
            find = self._text.find
            i = find("\n")
            while i != -1:
                starts.append(i + 1)
                i = find("\n", i + 1)
            self._line_starts = starts
        return self._line_starts

    def line_count(self) -> int:
        return len(self._starts())

    def line_start(self, lnum: int) -> int:
        starts = self._starts()
        if not 1 <= lnum <= len(starts):
            raise IndexError(f"line {lnum} out of range 1..{len(starts)}")
        return starts[lnum - 1]

    def line_end(self, lnum: int) -> int:
        """Offset of the newline ending ``lnum`` (or end of buffer)."""
        starts = self._starts()
        if lnum < len(starts):
            return starts[lnum] - 1
        return len(self._text)

    def line_text(self, lnum: int) -> str:
        return self._text[self.line_start(lnum) : self.line_end(lnum)]

    def line_of(self, pos: int) -> int:
        if not 0 <= pos <= len(self._text):
            raise IndexError(f"position {pos} out of range 0..{len(self._text)}")
        return bisect.bisect_right(self._starts(), pos)

    def pos_to_linecol(self, pos: int) -> tuple[int, int]:
        lnum = self.line_of(pos)
        return lnum, pos - self.line_start(lnum)

    def linecol_to_pos(self, lnum: int, col: int) -> int:
        start = self.line_start(lnum)
        end = self.line_end(lnum)
        if col < 0 or start + col > end:
            raise IndexError(f"column {col} out of range on line {lnum}")
        return start + col

    # -- mutation --------------------------------------------------------

    def replace(self, start: int, end: int, text: str) -> None:
        if not 0 <= start <= end <= len(self._text):
            raise IndexError(f"bad replace range {start}..{end}")
        if "\r" in text:
            text = text.replace("\r\n", "\n")
        self._text = self._text[:start] + text + self._text[end:]
        self._revision += 1
        self._edits.append(Edit(self._revision, start, end - start, len(text)))
        if len(self._edits) > MAX_EDIT_LOG:
            del self._edits[0]
            self._log_floor = self._edits[0].revision - 1
        self._line_starts = None

    def insert(self, pos: int, text: str) -> None:
        self.replace(pos, pos, text)

    def delete(self, start: int, end: int) -> None:
        self.replace(start, end, "")

    def edits_since(self, revision: int) -> list[Edit] | None:
        """Edits newer than ``revision``, oldest first.

        Returns None when ``revision`` predates the bounded log; callers must
        then treat the whole buffer as changed.
        """
        if revision >= self._revision:
            return []
        if revision < self._log_floor:
            return None
        return [e for e in self._edits if e.revision > revision]

    # -- serialization ---------------------------------------------------

    def to_string(self) -> str:
        if self._newline == "\r\n":
            return self._text.replace("\n", "\r\n")
        return self._text

    def to_bytes(self) -> bytes:
        return self.to_string().encode("utf-8")

    def save(self, path: str) -> None:
        with open(path, "wb") as fh:
            fh.write(self.to_bytes())
