"""Tokenizer for the line-oriented specification grammar.

The surface syntax is `key: value` pairs, `[a,b,...]` bracket lists,
`name {` ... `}` blocks, section headers (`key:` with no value), and `//`
comments. Indentation is not significant. Commas separate statements when
they appear outside brackets, so one-line documents are valid.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .model import SdlSyntaxError

_KEY_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9 ._-]*$")
_INT_RE = re.compile(r"^[+-]?\d+$")
_FLOAT_RE = re.compile(r"^[+-]?(\d+\.\d*|\.\d+|\d+)([eE][+-]?\d+)?$")
_FREQ_RE = re.compile(r"^([+-]?(\d+\.\d*|\.\d+|\d+))\s*[Hh]z$")
_IDENT_RE = re.compile(r"^[A-Za-z0-9_][A-Za-z0-9_.:/\\ -]*$")


@dataclass(frozen=True)
class Value:
    """A typed literal: kind is int | float | freq | bool | array | ident."""

    kind: str
    data: object
    line: int
    col: int


@dataclass(frozen=True)
class Stmt:
    kind: str  # block_open | block_close | section | kv
    key: str = ""
    value: Value | None = None
    line: int = 0
    col: int = 0


def normalize_key(raw: str) -> str:
    """Lowercase; runs of spaces/hyphens become single underscores."""
    return re.sub(r"[\s-]+", "_", raw.strip()).lower()


def _parse_scalar(text: str, line: int, col: int) -> Value:
    text = text.strip()
    if _INT_RE.match(text):
        return Value("int", int(text), line, col)
    if _FLOAT_RE.match(text):
        return Value("float", float(text), line, col)
    m = _FREQ_RE.match(text)
    if m:
        return Value("freq", float(m.group(1)), line, col)
    if text.lower() in ("true", "false"):
        return Value("bool", text.lower() == "true", line, col)
    if _IDENT_RE.match(text):
        return Value("ident", text, line, col)
    raise SdlSyntaxError(
        f"expected a number, range, boolean, or identifier, got '{text}'", line, col
    )


def _parse_value(text: str, line: int, col: int) -> Value:
    text = text.strip()
    if not text:
        raise SdlSyntaxError("expected a value after ':'", line, col)
    if text.startswith("["):
        if not text.endswith("]"):
            raise SdlSyntaxError("expected closing ']'", line, col)
        inner = text[1:-1].strip()
        items: list[object] = []
        if inner:
            for part in inner.split(","):
                items.append(_parse_scalar(part, line, col).data)
        return Value("array", tuple(items), line, col)
    return _parse_scalar(text, line, col)


def _emit_fragment(frag: str, line: int, col: int, out: list[Stmt]) -> None:
    frag = frag.strip()
    if not frag:
        return
    if ":" not in frag:
        raise SdlSyntaxError(f"expected ':' in statement '{frag}'", line, col)
    raw_key, _, raw_value = frag.partition(":")
    if not _KEY_RE.match(raw_key.strip()):
        raise SdlSyntaxError(f"expected a key before ':', got '{raw_key.strip()}'", line, col)
    key = normalize_key(raw_key)
    raw_value = raw_value.strip()
    if not raw_value:
        out.append(Stmt("section", key, None, line, col))
    else:
        out.append(Stmt("kv", key, _parse_value(raw_value, line, col), line, col))


def tokenize(text: str) -> list[Stmt]:
    """Split a document into statements; raises SdlSyntaxError with position."""
    stmts: list[Stmt] = []
    for lineno, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split("//", 1)[0]
        frag_start = 0
        depth = 0
        i = 0
        while i < len(line):
            ch = line[i]
            if ch == "[":
                depth += 1
            elif ch == "]":
                depth -= 1
                if depth < 0:
                    raise SdlSyntaxError("unmatched ']'", lineno, i + 1)
            elif depth == 0 and ch == "{":
                name = line[frag_start:i].strip()
                if not name or not _KEY_RE.match(name):
                    raise SdlSyntaxError("expected a block name before '{'", lineno, i + 1)
                stmts.append(Stmt("block_open", normalize_key(name), None, lineno, frag_start + 1))
                frag_start = i + 1
            elif depth == 0 and ch == "}":
                _emit_fragment(line[frag_start:i], lineno, frag_start + 1, stmts)
                stmts.append(Stmt("block_close", "", None, lineno, i + 1))
                frag_start = i + 1
            elif depth == 0 and ch == ",":
                _emit_fragment(line[frag_start:i], lineno, frag_start + 1, stmts)
                frag_start = i + 1
            i += 1
        if depth != 0:
            raise SdlSyntaxError("unclosed '[' in line", lineno, len(line))
        _emit_fragment(line[frag_start:], lineno, frag_start + 1, stmts)
    return stmts
