"""Turtle and N-Triples parsing and serialization for the graph model.

The parser is a hand-rolled tokenizer plus recursive descent covering the
Turtle subset the machine reader emits: @prefix, prefixed names (dots in the
prefix, as in ``vn.role:``), IRIs, blank node labels and property lists,
collections, the ``a`` keyword, string/numeric/boolean literals with language
tags and datatypes, and comments.  All IRIs must be absolute; @base and
relative references are rejected rather than resolved.

N-Triples is parsed with the same machinery restricted to the line-oriented
grammar (the literal quoting is slightly lenient: single-quoted strings are
accepted where strict N-Triples would not).
"""

from __future__ import annotations

import re
from typing import Dict, List, Optional, Tuple

from .rdf import BlankNode, Graph, Iri, Literal, Term, Triple

_XSD = "http://www.w3.org/2001/XMLSchema#"
_RDF = "http://www.w3.org/1999/02/22-rdf-syntax-ns#"
XSD_INTEGER = Iri(_XSD + "integer")
XSD_DECIMAL = Iri(_XSD + "decimal")
XSD_DOUBLE = Iri(_XSD + "double")
XSD_BOOLEAN = Iri(_XSD + "boolean")
RDF_TYPE = Iri(_RDF + "type")
RDF_FIRST = Iri(_RDF + "first")
RDF_REST = Iri(_RDF + "rest")
RDF_NIL = Iri(_RDF + "nil")

_GENID_PREFIX = "genid-"


class ParseError(ValueError):
    """Syntax error with 1-based line and column of the offending input."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
        self.reason = message


# Token types.
IRIREF = "IRIREF"
PNAME = "PNAME"
BLANK = "BLANK"
STRING = "STRING"
LANGTAG = "LANGTAG"
NUMBER = "NUMBER"
BOOLEAN = "BOOLEAN"
A_KW = "A"
PREFIX_KW = "PREFIX"
BASE_KW = "BASE"
DOT = "DOT"
SEMI = "SEMI"
COMMA = "COMMA"
LBRACKET = "LBRACKET"
RBRACKET = "RBRACKET"
LPAREN = "LPAREN"
RPAREN = "RPAREN"
DCARET = "DCARET"
EOF = "EOF"


class _Token:
    __slots__ = ("type", "value", "line", "col")

    def __init__(self, type_: str, value, line: int, col: int):
        self.type = type_
        self.value = value
        self.line = line
        self.col = col


_PNAME_PREFIX_RE = re.compile(r"(?:[A-Za-z](?:[A-Za-z0-9_.\-]*[A-Za-z0-9_\-])?)?:")
_LANGTAG_RE = re.compile(r"[A-Za-z]+(?:-[A-Za-z0-9]+)*")
_DOUBLE_RE = re.compile(r"[+-]?(?:\d+\.\d*[eE][+-]?\d+|\.\d+[eE][+-]?\d+|\d+[eE][+-]?\d+)")
_DECIMAL_RE = re.compile(r"[+-]?\d*\.\d+")
_INTEGER_RE = re.compile(r"[+-]?\d+")
_BLANK_LABEL_RE = re.compile(r"[A-Za-z0-9_](?:[A-Za-z0-9_.\-]*[A-Za-z0-9_\-])?")

_STRING_ESCAPES = {
    "t": "\t", "b": "\b", "n": "\n", "r": "\r", "f": "\f",
    '"': '"', "'": "'", "\\": "\\",
}
_LOCAL_ESCAPABLE = set("_~.-!$&'()*+,;=/?#@%")


class _Lexer:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.line = 1
        self.col = 1

    def error(self, message: str, line: Optional[int] = None, col: Optional[int] = None):
        raise ParseError(message, line if line is not None else self.line,
                         col if col is not None else self.col)

    def _advance(self, n: int = 1) -> None:
        for _ in range(n):
            if self.pos < len(self.text):
                if self.text[self.pos] == "\n":
                    self.line += 1
                    self.col = 1
                else:
                    self.col += 1
                self.pos += 1

    def _peek(self, offset: int = 0) -> str:
        i = self.pos + offset
        return self.text[i] if i < len(self.text) else ""

    def _skip_ws_and_comments(self) -> None:
        while self.pos < len(self.text):
            c = self.text[self.pos]
            if c in " \t\r\n":
                self._advance()
            elif c == "#":
                while self.pos < len(self.text) and self.text[self.pos] != "\n":
                    self._advance()
            else:
                return

    def next_token(self) -> _Token:
        self._skip_ws_and_comments()
        line, col = self.line, self.col
        if self.pos >= len(self.text):
            return _Token(EOF, None, line, col)
        c = self._peek()

        if c == "<":
            return self._lex_iriref(line, col)
        if c in "\"'":
            return self._lex_string(line, col)
        if c == "@":
            return self._lex_at(line, col)
        if c == "_" and self._peek(1) == ":":
            return self._lex_blank(line, col)
        if c == "^" and self._peek(1) == "^":
            self._advance(2)
            return _Token(DCARET, "^^", line, col)
        if c == ";":
            self._advance()
            return _Token(SEMI, c, line, col)
        if c == ",":
            self._advance()
            return _Token(COMMA, c, line, col)
        if c == "[":
            self._advance()
            return _Token(LBRACKET, c, line, col)
        if c == "]":
            self._advance()
            return _Token(RBRACKET, c, line, col)
        if c == "(":
            self._advance()
            return _Token(LPAREN, c, line, col)
        if c == ")":
            self._advance()
            return _Token(RPAREN, c, line, col)

        num = self._try_number(line, col)
        if num is not None:
            return num
        if c == ".":
            self._advance()
            return _Token(DOT, c, line, col)

        pname = self._try_pname(line, col)
        if pname is not None:
            return pname
        if c.isalpha():
            word = self._read_while(str.isalpha)
            if word == "a":
                return _Token(A_KW, word, line, col)
            if word in ("true", "false"):
                return _Token(BOOLEAN, word, line, col)
            self.error(f"unexpected identifier {word!r}", line, col)
        self.error(f"unexpected character {c!r}", line, col)

    def _read_while(self, pred) -> str:
        start = self.pos
        while self.pos < len(self.text) and pred(self.text[self.pos]):
            self._advance()
        return self.text[start:self.pos]

    def _lex_iriref(self, line: int, col: int) -> _Token:
        self._advance()  # '<'
        out: List[str] = []
        while True:
            if self.pos >= len(self.text):
                self.error("unterminated IRI", line, col)
            c = self._peek()
            if c == ">":
                self._advance()
                return _Token(IRIREF, "".join(out), line, col)
            if c in " \n\t\r<\"{}|^`":
                self.error(f"illegal character {c!r} in IRI", self.line, self.col)
            if c == "\\":
                line2, col2 = self.line, self.col
                self._advance()
                if self._peek() not in ("u", "U"):
                    self.error(f"illegal escape '\\{self._peek()}' in IRI", line2, col2)
                out.append(self._lex_uchar_tail())
            else:
                out.append(c)
                self._advance()

    def _lex_uchar_tail(self) -> str:
        """Decode uXXXX / UXXXXXXXX with the cursor on the 'u'/'U'."""
        line, col = self.line, self.col
        width = 4 if self._peek() == "u" else 8
        self._advance()
        digits = self.text[self.pos:self.pos + width]
        if len(digits) < width or not all(d in "0123456789abcdefABCDEF" for d in digits):
            self.error("malformed \\u escape", line, col)
        self._advance(width)
        return chr(int(digits, 16))

    def _lex_string(self, line: int, col: int) -> _Token:
        quote = self._peek()
        long_form = self.text.startswith(quote * 3, self.pos)
        self._advance(3 if long_form else 1)
        out: List[str] = []
        while True:
            if self.pos >= len(self.text):
                self.error("unterminated string", line, col)
            c = self._peek()
            if long_form and self.text.startswith(quote * 3, self.pos):
                self._advance(3)
                return _Token(STRING, "".join(out), line, col)
            if not long_form and c == quote:
                self._advance()
                return _Token(STRING, "".join(out), line, col)
            if not long_form and c == "\n":
                self.error("newline in single-line string", self.line, self.col)
            if c == "\\":
                eline, ecol = self.line, self.col
                self._advance()
                e = self._peek()
                if e in _STRING_ESCAPES:
                    out.append(_STRING_ESCAPES[e])
                    self._advance()
                elif e in ("u", "U"):
                    out.append(self._lex_uchar_tail())
                else:
                    self.error(f"illegal string escape '\\{e}'", eline, ecol)
            else:
                out.append(c)
                self._advance()

    def _lex_at(self, line: int, col: int) -> _Token:
        self._advance()  # '@'
        m = _LANGTAG_RE.match(self.text, self.pos)
        if not m:
            self.error("expected language tag or directive after '@'", line, col)
        word = m.group(0)
        if word == "prefix":
            self._advance(len(word))
            return _Token(PREFIX_KW, word, line, col)
        if word == "base":
            self._advance(len(word))
            return _Token(BASE_KW, word, line, col)
        self._advance(len(word))
        return _Token(LANGTAG, word, line, col)

    def _lex_blank(self, line: int, col: int) -> _Token:
        self._advance(2)  # '_:'
        m = _BLANK_LABEL_RE.match(self.text, self.pos)
        if not m:
            self.error("malformed blank node label", line, col)
        label = m.group(0)
        self._advance(len(label))
        return _Token(BLANK, label, line, col)

    def _try_number(self, line: int, col: int) -> Optional[_Token]:
        for regex, dtype in ((_DOUBLE_RE, XSD_DOUBLE), (_DECIMAL_RE, XSD_DECIMAL), (_INTEGER_RE, XSD_INTEGER)):
            m = regex.match(self.text, self.pos)
            if m:
                self._advance(len(m.group(0)))
                return _Token(NUMBER, (m.group(0), dtype), line, col)
        return None

    def _try_pname(self, line: int, col: int) -> Optional[_Token]:
        m = _PNAME_PREFIX_RE.match(self.text, self.pos)
        if not m:
            return None
        prefix = m.group(0)[:-1]
        self._advance(len(m.group(0)))
        local = self._lex_local()
        return _Token(PNAME, (prefix, local), line, col)

    def _lex_local(self) -> str:
        out: List[str] = []
        while self.pos < len(self.text):
            c = self._peek()
            if c.isalnum() or c in "_-%":
                out.append(c)
                self._advance()
            elif c == "." and (self._peek(1).isalnum() or self._peek(1) in "_-%.\\"):
                # dots are allowed inside local names but never at the end
                out.append(c)
                self._advance()
            elif c == "\\" and self._peek(1) in _LOCAL_ESCAPABLE:
                out.append(self._peek(1))
                self._advance(2)
            else:
                break
        return "".join(out)


class _Parser:
    """Recursive-descent parser; ntriples mode restricts to the N-Triples grammar."""

    def __init__(self, text: str, ntriples: bool = False):
        self.lexer = _Lexer(text)
        self.ntriples = ntriples
        self.prefixes: Dict[str, str] = {}
        self.triples: List[Triple] = []
        self.token = self.lexer.next_token()
        # Start invented labels past any explicit genid-N label in the input
        # so bracket-syntax blanks survive serialize/parse round-trips.
        used = re.findall(rf"_:{_GENID_PREFIX}(\d+)", text)
        self._genid = max((int(n) for n in used), default=0)

    def error(self, message: str, token: Optional[_Token] = None):
        tok = token or self.token
        raise ParseError(message, tok.line, tok.col)

    def _next(self) -> _Token:
        tok = self.token
        self.token = self.lexer.next_token()
        return tok

    def _expect(self, type_: str) -> _Token:
        if self.token.type != type_:
            self.error(f"expected {type_}, found {self.token.type}")
        return self._next()

    def _fresh_blank(self) -> BlankNode:
        self._genid += 1
        return BlankNode(f"{_GENID_PREFIX}{self._genid}")

    def parse(self) -> Graph:
        while self.token.type != EOF:
            if self.token.type == PREFIX_KW:
                self._parse_prefix()
            elif self.token.type == BASE_KW:
                self.error("@base is not supported; use absolute IRIs")
            else:
                self._parse_triples()
        return Graph(self.triples, self.prefixes)

    def _parse_prefix(self) -> None:
        if self.ntriples:
            self.error("@prefix is not allowed in N-Triples")
        self._next()
        tok = self._expect(PNAME)
        prefix, local = tok.value
        if local:
            self.error("expected a bare prefix ending in ':'", tok)
        iri_tok = self._expect(IRIREF)
        self.prefixes[prefix] = self._check_absolute(iri_tok).value
        self._expect(DOT)

    def _check_absolute(self, tok: _Token) -> Iri:
        try:
            return Iri(tok.value)
        except ValueError as exc:
            raise ParseError(str(exc), tok.line, tok.col) from None

    def _resolve_pname(self, tok: _Token) -> Iri:
        prefix, local = tok.value
        if prefix not in self.prefixes:
            self.error(f"undeclared prefix {prefix + ':'!r}", tok)
        try:
            return Iri(self.prefixes[prefix] + local)
        except ValueError as exc:
            raise ParseError(str(exc), tok.line, tok.col) from None

    def _parse_triples(self) -> None:
        if self.token.type == LBRACKET and not self.ntriples:
            subject = self._parse_bracket_node()
            if self.token.type == DOT:  # bare property list is a complete statement
                self._next()
                return
        else:
            subject = self._parse_subject()
        self._parse_predicate_object_list(subject)
        self._expect(DOT)

    def _parse_subject(self) -> Term:
        tok = self.token
        if tok.type == IRIREF:
            self._next()
            return self._check_absolute(tok)
        if tok.type == PNAME and not self.ntriples:
            self._next()
            return self._resolve_pname(tok)
        if tok.type == BLANK:
            self._next()
            return BlankNode(tok.value)
        if tok.type == LPAREN and not self.ntriples:
            return self._parse_collection()
        self.error(f"expected subject, found {tok.type}")

    def _parse_predicate_object_list(self, subject: Term) -> None:
        while True:
            predicate = self._parse_predicate()
            self._parse_object_list(subject, predicate)
            if self.ntriples or self.token.type != SEMI:
                return
            while self.token.type == SEMI:
                self._next()
            if self.token.type in (DOT, RBRACKET):  # trailing ';'
                return

    def _parse_predicate(self) -> Iri:
        tok = self.token
        if tok.type == A_KW and not self.ntriples:
            self._next()
            return RDF_TYPE
        if tok.type == IRIREF:
            self._next()
            return self._check_absolute(tok)
        if tok.type == PNAME and not self.ntriples:
            self._next()
            return self._resolve_pname(tok)
        self.error(f"expected predicate, found {tok.type}")

    def _parse_object_list(self, subject: Term, predicate: Iri) -> None:
        while True:
            obj = self._parse_object()
            self.triples.append(Triple(subject, predicate, obj))
            if self.ntriples or self.token.type != COMMA:
                return
            self._next()

    def _parse_object(self) -> Term:
        tok = self.token
        if tok.type == IRIREF:
            self._next()
            return self._check_absolute(tok)
        if tok.type == PNAME and not self.ntriples:
            self._next()
            return self._resolve_pname(tok)
        if tok.type == BLANK:
            self._next()
            return BlankNode(tok.value)
        if tok.type == STRING:
            return self._parse_string_literal()
        if tok.type == NUMBER and not self.ntriples:
            self._next()
            lexical, dtype = tok.value
            return Literal(lexical, datatype=dtype)
        if tok.type == BOOLEAN and not self.ntriples:
            self._next()
            return Literal(tok.value, datatype=XSD_BOOLEAN)
        if tok.type == LBRACKET and not self.ntriples:
            return self._parse_bracket_node()
        if tok.type == LPAREN and not self.ntriples:
            return self._parse_collection()
        self.error(f"expected object, found {tok.type}")

    def _parse_string_literal(self) -> Literal:
        tok = self._next()
        if self.token.type == LANGTAG:
            lang = self._next()
            return Literal(tok.value, language=lang.value)
        if self.token.type == DCARET:
            self._next()
            dt_tok = self.token
            if dt_tok.type == IRIREF:
                self._next()
                return Literal(tok.value, datatype=self._check_absolute(dt_tok))
            if dt_tok.type == PNAME and not self.ntriples:
                self._next()
                return Literal(tok.value, datatype=self._resolve_pname(dt_tok))
            self.error(f"expected datatype IRI, found {dt_tok.type}")
        return Literal(tok.value)

    def _parse_bracket_node(self) -> BlankNode:
        self._expect(LBRACKET)
        node = self._fresh_blank()
        if self.token.type != RBRACKET:
            self._parse_predicate_object_list(node)
        self._expect(RBRACKET)
        return node

    def _parse_collection(self) -> Term:
        self._expect(LPAREN)
        items: List[Term] = []
        while self.token.type != RPAREN:
            items.append(self._parse_object())
        self._expect(RPAREN)
        if not items:
            return RDF_NIL
        head = self._fresh_blank()
        node = head
        for i, item in enumerate(items):
            self.triples.append(Triple(node, RDF_FIRST, item))
            rest: Term = RDF_NIL if i == len(items) - 1 else self._fresh_blank()
            self.triples.append(Triple(node, RDF_REST, rest))
            node = rest
        return head


def parse_turtle(text: str) -> Graph:
    """Parse a Turtle document into a Graph; raises ParseError with line/column."""
    return _Parser(text, ntriples=False).parse()


def parse_ntriples(text: str) -> Graph:
    """Parse an N-Triples document into a Graph with an empty prefix map."""
    return _Parser(text, ntriples=True).parse()


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------

_SAFE_LOCAL_RE = re.compile(r"^(?:[A-Za-z0-9_](?:[A-Za-z0-9_.\-]*[A-Za-z0-9_\-])?)?$")


def _escape_string(s: str) -> str:
    out = []
    for c in s:
        if c == "\\":
            out.append("\\\\")
        elif c == '"':
            out.append('\\"')
        elif c == "\n":
            out.append("\\n")
        elif c == "\r":
            out.append("\\r")
        elif c == "\t":
            out.append("\\t")
        elif ord(c) < 0x20:
            out.append(f"\\u{ord(c):04X}")
        else:
            out.append(c)
    return "".join(out)


def _nt_term(t: Term) -> str:
    if isinstance(t, Iri):
        return f"<{t.value}>"
    if isinstance(t, BlankNode):
        return f"_:{t.label}"
    base = f'"{_escape_string(t.lexical)}"'
    if t.language:
        return f"{base}@{t.language}"
    if t.datatype:
        return f"{base}^^<{t.datatype.value}>"
    return base


def serialize_ntriples(g: Graph) -> str:
    """Deterministic N-Triples serialization (sorted, one triple per line)."""
    lines = [
        f"{_nt_term(t.subject)} {_nt_term(t.predicate)} {_nt_term(t.object)} ."
        for t in g.sorted_triples()
    ]
    return "\n".join(lines) + ("\n" if lines else "")


def _shorten(iri: Iri, prefixes) -> Optional[str]:
    best: Optional[Tuple[str, str]] = None
    for prefix, ns in prefixes.items():
        if iri.value.startswith(ns) and (best is None or len(ns) > len(best[1])):
            best = (prefix, ns)
    if best is None:
        return None
    local = iri.value[len(best[1]):]
    if not _SAFE_LOCAL_RE.match(local):
        return None
    return f"{best[0]}:{local}"


def _turtle_term(t: Term, prefixes) -> str:
    if isinstance(t, Iri):
        short = _shorten(t, prefixes)
        return short if short is not None else f"<{t.value}>"
    if isinstance(t, BlankNode):
        return f"_:{t.label}"
    base = f'"{_escape_string(t.lexical)}"'
    if t.language:
        return f"{base}@{t.language}"
    if t.datatype:
        dt = _shorten(t.datatype, prefixes)
        return f"{base}^^{dt}" if dt is not None else f"{base}^^<{t.datatype.value}>"
    return base


def serialize_turtle(g: Graph) -> str:
    """Deterministic Turtle serialization grouping predicates by subject."""
    lines: List[str] = []
    for prefix in sorted(g.prefixes):
        lines.append(f"@prefix {prefix}: <{g.prefixes[prefix]}> .")
    if g.prefixes and len(g):
        lines.append("")

    current_subject: Optional[Term] = None
    for t in g.sorted_triples():
        pred = "a" if t.predicate == RDF_TYPE else _turtle_term(t.predicate, g.prefixes)
        obj = _turtle_term(t.object, g.prefixes)
        if t.subject != current_subject:
            if current_subject is not None:
                lines[-1] += " ."
            current_subject = t.subject
            lines.append(f"{_turtle_term(t.subject, g.prefixes)} {pred} {obj}")
        else:
            lines[-1] += " ;"
            lines.append(f"    {pred} {obj}")
    if current_subject is not None:
        lines[-1] += " ."
    return "\n".join(lines) + ("\n" if lines else "")
