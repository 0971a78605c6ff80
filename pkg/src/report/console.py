"""
Terminal Output Helpers

Coloured progress and diagnostic lines for long computations. Everything
here writes to stderr so JSON/CSV documents on stdout stay clean.
colorama is optional; without it the helpers print plain text.

Part of: whittaker_lab - p-adic Whittaker transform toolkit
"""

from __future__ import annotations

import re
import sys
import unicodedata
from typing import List, Optional, Sequence, TextIO

# Optional color support -----------------------------------------------------
try:
    from colorama import Fore, Style, init as colorama_init
    colorama_init()
    HAS_COLOR = True
except Exception:
    class _Plain:
        def __getattr__(self, _name: str) -> str:
            return ""
    Fore = Style = _Plain()  # type: ignore
    HAS_COLOR = False


class Colors:
    """Color palette shared by console lines and text reports"""
    PRIMARY = Fore.CYAN
    SECONDARY = Fore.BLUE
    SUCCESS = Fore.GREEN
    WARNING = Fore.YELLOW
    ERROR = Fore.RED
    DIM = Style.DIM
    BRIGHT = Style.BRIGHT
    RESET = Style.RESET_ALL


class Icons:
    CHECKMARK = "✓"
    CROSS = "✗"
    ARROW_RIGHT = "→"
    BULLET = "•"
    WARNING = "⚠"


_ANSI = re.compile(r"\x1b\[[0-9;]*m")


def _stream(stream: Optional[TextIO]) -> TextIO:
    return stream if stream is not None else sys.stderr


def colorize(text: str, color: str = "", stream: Optional[TextIO] = None) -> str:
    """Apply color when the target stream is a terminal"""
    target = _stream(stream)
    if HAS_COLOR and color and hasattr(target, "isatty") and target.isatty():
        return f"{color}{text}{Style.RESET_ALL}"
    return text


def strip_ansi(text: str) -> str:
    return _ANSI.sub("", text)


def visible_width(text: str) -> int:
    """Printable width ignoring ANSI codes, counting wide glyphs twice"""
    return sum(2 if unicodedata.east_asian_width(ch) in {"W", "F"} else 1 for ch in strip_ansi(text))


def pad_text(text: str, width: int, *, align: str = "left") -> str:
    padding = max(0, width - visible_width(text))
    if align == "right":
        return " " * padding + text
    if align == "center":
        left = padding // 2
        return " " * left + text + " " * (padding - left)
    return text + " " * padding


def draw_header(title: str, width: int = 72, stream: Optional[TextIO] = None) -> str:
    """Double-line boxed title"""
    top = "╔" + "═" * (width - 2) + "╗"
    bottom = "╚" + "═" * (width - 2) + "╝"
    middle = "║ " + pad_text(title, width - 4, align="center") + " ║"
    return colorize("\n".join([top, middle, bottom]), Colors.PRIMARY + Colors.BRIGHT, stream)


def draw_section(title: str) -> str:
    return f"\n╭─ {title}\n"


def format_table(headers: Sequence[str], rows: Sequence[Sequence[str]]) -> List[str]:
    """Box-drawn table; column widths follow the widest cell"""
    widths = []
    for i, header in enumerate(headers):
        cells = [visible_width(str(row[i])) for row in rows if i < len(row)]
        widths.append(max([visible_width(str(header))] + cells) + 2)

    lines = ["┌" + "┬".join("─" * w for w in widths) + "┐"]
    lines.append("│" + "│".join(pad_text(str(h), w, align="center") for h, w in zip(headers, widths)) + "│")
    lines.append("├" + "┼".join("─" * w for w in widths) + "┤")
    for row in rows:
        cells = [str(row[i]) if i < len(row) else "" for i in range(len(headers))]
        lines.append("│" + "│".join(pad_text(" " + c, w) for c, w in zip(cells, widths)) + "│")
    lines.append("└" + "┴".join("─" * w for w in widths) + "┘")
    return lines


def _emit(text: str, color: str, stream: Optional[TextIO]) -> None:
    target = _stream(stream)
    print(colorize(text, color, target), file=target, flush=True)


def step(message: str, stream: Optional[TextIO] = None) -> None:
    """Stage progress line, e.g. '[1/3] Building kernel'"""
    _emit(f"  {Icons.ARROW_RIGHT} {message}", Colors.PRIMARY, stream)


def info(message: str, stream: Optional[TextIO] = None) -> None:
    _emit(f"  {message}", "", stream)


def success(message: str, stream: Optional[TextIO] = None) -> None:
    _emit(f"  {Icons.CHECKMARK} {message}", Colors.SUCCESS, stream)


def warning(message: str, stream: Optional[TextIO] = None) -> None:
    _emit(f"  {Icons.WARNING} {message}", Colors.WARNING, stream)


def failure(message: str, stream: Optional[TextIO] = None) -> None:
    _emit(f"  {Icons.CROSS} {message}", Colors.ERROR + Colors.BRIGHT, stream)


__all__ = [
    'HAS_COLOR',
    'Colors',
    'Icons',
    'colorize',
    'strip_ansi',
    'visible_width',
    'pad_text',
    'draw_header',
    'draw_section',
    'format_table',
    'step',
    'info',
    'success',
    'warning',
    'failure',
]
