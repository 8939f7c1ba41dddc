"""Command-line interface: a single-file declaration language plus commands.

Exit codes: 0 = property holds / computation succeeded, 1 = a property fails
(an axiom is violated, a map is not Kummer, ...), 2 = input error, 3 = a
bounded semi-decision ran out of budget.  Reports are `key = value` lines,
optionally followed by a witness block, and are byte-deterministic for fixed
input and flags.
"""

from __future__ import annotations

import argparse
import random
import sys
from fractions import Fraction

from .bounds import Bounds
from .chart import KatoChart, RationalPoint, df_quotient, make_chart, stalk_df
from .equivalence import (
    GradedPresentation,
    phi,
    psi,
    roundtrip_check,
)
from .errors import InputError, LogrootError, ResourceError, UnsupportedOperationError, ValidationError
from .kummer import DenominatorSystem, is_kummer, make_denominator_system
from .linalg import Matrix
from .monoid import FpMonoid, MonoidHom, word_add, word_ball, word_leq, word_sub
from .parabolic import ParabolicSheaf, RModule, make_parabolic, parabolic_hom, parabolic_tensor
from .poly import BaseRing, parse_element, ring_from_literal
from .rootalg import GradedRootAlgebra, build_root_algebra, classify_stack
from .serialize import (
    algebra_lines,
    fmt_flag,
    fmt_group,
    fmt_matrix,
    fmt_value,
    monoid_lines,
    presentation_lines,
    sheaf_lines,
)

# ---------------------------------------------------------------------------
# tokenizer


class Token:
    __slots__ = ("kind", "value", "line", "col", "start", "end")

    def __init__(self, kind, value, line, col, start, end):
        self.kind = kind
        self.value = value
        self.line = line
        self.col = col
        self.start = start
        self.end = end

    def __repr__(self):
        return f"Token({self.kind}, {self.value!r}, {self.line}:{self.col})"


_PUNCT = ("->", "{", "}", "(", ")", "[", "]", ";", ":", ",", "+", "-", "*", "/", "^", "=")


def tokenize(source: str):
    tokens = []
    i = 0
    line = 1
    line_start = 0
    n = len(source)
    while i < n:
        ch = source[i]
        if ch == "\n":
            line += 1
            i += 1
            line_start = i
            continue
        if ch.isspace():
            i += 1
            continue
        if ch == "#":
            while i < n and source[i] != "\n":
                i += 1
            continue
        col = i - line_start + 1
        if source.startswith("->", i):
            tokens.append(Token("->", "->", line, col, i, i + 2))
            i += 2
            continue
        if ch.isdigit():
            j = i
            while j < n and source[j].isdigit():
                j += 1
            tokens.append(Token("int", int(source[i:j]), line, col, i, j))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (source[j].isalnum() or source[j] == "_"):
                j += 1
            tokens.append(Token("name", source[i:j], line, col, i, j))
            i = j
            continue
        for p in _PUNCT:
            if source.startswith(p, i):
                tokens.append(Token(p, p, line, col, i, i + len(p)))
                i += len(p)
                break
        else:
            raise InputError(f"line {line}, column {col}: unexpected character {ch!r}")
    tokens.append(Token("end", None, line, 1, n, n))
    return tokens


# ---------------------------------------------------------------------------
# document parser (produces raw declarations; semantics happen later)


class Declaration:
    def __init__(self, kind, name, data, line):
        self.kind = kind
        self.name = name
        self.data = data
        self.line = line


class DocumentParser:
    def __init__(self, source: str):
        self.source = source
        self.tokens = tokenize(source)
        self.pos = 0

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def take(self, kind=None, value=None) -> Token:
        tok = self.tokens[self.pos]
        if kind and tok.kind != kind:
            raise InputError(
                f"line {tok.line}, column {tok.col}: expected {kind}, found {tok.kind}"
            )
        if value is not None and tok.value != value:
            raise InputError(
                f"line {tok.line}, column {tok.col}: expected {value!r}, found {tok.value!r}"
            )
        self.pos += 1
        return tok

    def take_keyword(self, word: str) -> Token:
        return self.take("name", word)

    def raw_until(self, stop_kinds) -> str:
        """Raw source until one of stop_kinds at bracket depth zero."""
        depth = 0
        start_tok = self.peek()
        last_end = start_tok.start
        while True:
            tok = self.peek()
            if tok.kind == "end":
                raise InputError(f"line {tok.line}: unexpected end of input")
            if depth == 0 and tok.kind in stop_kinds:
                break
            if tok.kind in ("(", "["):
                depth += 1
            elif tok.kind in (")", "]"):
                depth -= 1
            last_end = tok.end
            self.pos += 1
        return self.source[start_tok.start : last_end]

    def parse(self) -> list:
        decls = []
        while self.peek().kind != "end":
            decls.append(self.declaration())
        return decls

    def declaration(self) -> Declaration:
        head = self.take("name")
        kind = head.value
        handler = {
            "monoid": self.monoid_decl,
            "hom": self.hom_decl,
            "ring": self.ring_decl,
            "chart": self.chart_decl,
            "denominators": self.denominators_decl,
            "algebra": self.algebra_decl,
            "parabolic": self.parabolic_decl,
            "gradedmodule": self.gradedmodule_decl,
        }.get(kind)
        if handler is None:
            raise InputError(f"line {head.line}: unknown declaration kind {kind!r}")
        name = self.take("name").value
        return Declaration(kind, name, handler(), head.line)

    # -- words

    def word_tokens(self):
        """A '+'-combination of generator names with integer coefficients."""
        terms = []
        if self.peek().kind == "int" and self.peek().value == 0:
            nxt = self.tokens[self.pos + 1]
            if nxt.kind not in ("name", "*", "int"):
                self.take("int")
                return terms
        while True:
            coef = 1
            if self.peek().kind == "int":
                coef = self.take("int").value
                if self.peek().kind == "*":
                    self.take("*")
            gen = self.take("name").value
            terms.append((coef, gen))
            if self.peek().kind == "+":
                self.take("+")
                continue
            return terms

    # -- degrees

    def degree_literal(self) -> str:
        if self.peek().kind == "(":
            self.take("(")
            parts = [self.fraction_literal()]
            while self.peek().kind == ",":
                self.take(",")
                parts.append(self.fraction_literal())
            self.take(")")
            return "(" + ", ".join(parts) + ")"
        return self.fraction_literal()

    def fraction_literal(self) -> str:
        sign = ""
        if self.peek().kind == "-":
            self.take("-")
            sign = "-"
        num = self.take("int").value
        if self.peek().kind == "/":
            self.take("/")
            den = self.take("int").value
            return f"{sign}{num}/{den}"
        return f"{sign}{num}"

    # -- matrices (entries captured raw)

    def matrix_literal(self):
        self.take("[")
        rows = []
        if self.peek().kind == "]":
            self.take("]")
            return rows
        while True:
            self.take("[")
            row = []
            if self.peek().kind == "]":
                self.take("]")
            else:
                while True:
                    row.append(self.raw_until((",", "]")))
                    if self.peek().kind == ",":
                        self.take(",")
                        continue
                    self.take("]")
                    break
            rows.append(row)
            if self.peek().kind == ",":
                self.take(",")
                continue
            self.take("]")
            return rows

    # -- declaration bodies

    def monoid_decl(self):
        self.take("{")
        self.take_keyword("gens")
        gens = []
        while self.peek().kind == "name":
            gens.append(self.take("name").value)
        self.take(";")
        rels = []
        while self.peek().kind != "}":
            self.take_keyword("rel")
            lhs = self.word_tokens()
            self.take("=")
            rhs = self.word_tokens()
            self.take(";")
            rels.append((lhs, rhs))
        self.take("}")
        return {"gens": gens, "rels": rels}

    def hom_decl(self):
        self.take(":")
        source = self.take("name").value
        self.take("->")
        target = self.take("name").value
        self.take("{")
        images = []
        while self.peek().kind != "}":
            gen = self.take("name").value
            self.take("->")
            images.append((gen, self.word_tokens()))
            self.take(";")
        self.take("}")
        return {"source": source, "target": target, "images": images}

    def ring_decl(self):
        self.take("=")
        literal = self.raw_until((";",))
        self.take(";")
        return {"literal": literal}

    def chart_decl(self):
        self.take(":")
        monoid = self.take("name").value
        self.take("->")
        ring = self.take("name").value
        self.take("{")
        values = []
        while self.peek().kind != "}":
            gen = self.take("name").value
            self.take("->")
            values.append((gen, self.raw_until((";",))))
            self.take(";")
        self.take("}")
        return {"monoid": monoid, "ring": ring, "values": values}

    def denominators_decl(self):
        self.take(":")
        hom = self.take("name").value
        self.take(";")
        return {"hom": hom}

    def algebra_decl(self):
        self.take(":")
        chart = self.take("name").value
        denominators = self.take("name").value
        self.take(";")
        return {"chart": chart, "denominators": denominators}

    def parabolic_decl(self):
        self.take(":")
        algebra = self.take("name").value
        self.take("{")
        slots = []
        maps = []
        while self.peek().kind != "}":
            word = self.take("name")
            if word.value == "slot":
                degree = self.degree_literal()
                self.take(":")
                rank = self.take("int").value
                self.take(";")
                slots.append((degree, rank))
            elif word.value == "map":
                degree = self.degree_literal()
                gen = self.take("name").value
                self.take(":")
                maps.append((degree, gen, self.matrix_literal()))
                self.take(";")
            else:
                raise InputError(f"line {word.line}: expected 'slot' or 'map', found {word.value!r}")
        self.take("}")
        return {"algebra": algebra, "slots": slots, "maps": maps}

    def gradedmodule_decl(self):
        self.take(":")
        algebra = self.take("name").value
        self.take("{")
        gens = []
        rels = []
        while self.peek().kind != "}":
            word = self.take("name")
            if word.value == "gen":
                gen = self.take("name").value
                self.take(":")
                gens.append((gen, self.degree_literal()))
                self.take(";")
            elif word.value == "rel":
                rels.append(self.raw_until((";",)))
                self.take(";")
            else:
                raise InputError(f"line {word.line}: expected 'gen' or 'rel', found {word.value!r}")
        self.take("}")
        return {"algebra": algebra, "gens": gens, "rels": rels}


# ---------------------------------------------------------------------------
# elaboration


class Document:
    """Named declarations resolved on demand; order independent."""

    def __init__(self, source: str, bounds: Bounds):
        self.bounds = bounds
        decls = DocumentParser(source).parse()
        self.decls = {}
        for d in decls:
            if d.name in self.decls:
                raise InputError(f"line {d.line}: duplicate name {d.name!r}")
            self.decls[d.name] = d
        self._cache = {}
        self._building = set()

    def _get(self, name: str, kind: str):
        if name not in self.decls:
            raise InputError(f"unknown name {name!r}")
        decl = self.decls[name]
        if decl.kind != kind:
            raise InputError(f"{name!r} is a {decl.kind}, expected a {kind}")
        key = (kind, name)
        if key in self._cache:
            return self._cache[key]
        if key in self._building:
            raise InputError(f"circular reference through {name!r}")
        self._building.add(key)
        try:
            value = getattr(self, f"_build_{kind}")(decl)
        finally:
            self._building.discard(key)
        self._cache[key] = value
        return value

    def kind_of(self, name: str) -> str:
        if name not in self.decls:
            raise InputError(f"unknown name {name!r}")
        return self.decls[name].kind

    def monoid(self, name) -> FpMonoid:
        return self._get(name, "monoid")

    def hom(self, name) -> MonoidHom:
        return self._get(name, "hom")

    def ring(self, name) -> BaseRing:
        return self._get(name, "ring")

    def chart(self, name) -> KatoChart:
        return self._get(name, "chart")

    def denominators(self, name) -> DenominatorSystem:
        return self._get(name, "denominators")

    def algebra(self, name) -> GradedRootAlgebra:
        return self._get(name, "algebra")

    def parabolic(self, name) -> ParabolicSheaf:
        return self._get(name, "parabolic")

    def gradedmodule(self, name) -> GradedPresentation:
        return self._get(name, "gradedmodule")

    # -- builders

    @staticmethod
    def _word(monoid: FpMonoid, terms) -> tuple:
        w = [0] * monoid.num_generators
        for coef, gen in terms:
            if gen not in monoid.names:
                raise InputError(f"unknown generator {gen!r}")
            w[monoid.names.index(gen)] += coef
        return tuple(w)

    def _build_monoid(self, decl) -> FpMonoid:
        gens = decl.data["gens"]
        if len(set(gens)) != len(gens):
            raise InputError(f"duplicate generator names in monoid {decl.name!r}")
        stage = FpMonoid.free(len(gens), tuple(gens), bounds=self.bounds)
        rels = [
            (self._word(stage, lhs), self._word(stage, rhs))
            for lhs, rhs in decl.data["rels"]
        ]
        return FpMonoid(len(gens), rels, tuple(gens), bounds=self.bounds)

    def _build_hom(self, decl) -> MonoidHom:
        source = self.monoid(decl.data["source"])
        target = self.monoid(decl.data["target"])
        given = dict()
        for gen, word in decl.data["images"]:
            if gen in given:
                raise InputError(f"generator {gen!r} mapped twice")
            given[gen] = self._word(target, word)
        images = []
        for name in source.names:
            if name not in given:
                raise InputError(f"hom {decl.name!r} does not map generator {name!r}")
            images.append(given[name])
        return MonoidHom(source, target, images)

    def _build_ring(self, decl) -> BaseRing:
        return ring_from_literal(decl.data["literal"])

    def _build_chart(self, decl) -> KatoChart:
        monoid = self.monoid(decl.data["monoid"])
        ring = self.ring(decl.data["ring"])
        given = {}
        for gen, raw in decl.data["values"]:
            given[gen] = parse_element(ring, raw)
        values = []
        for name in monoid.names:
            if name not in given:
                raise InputError(f"chart {decl.name!r} does not assign generator {name!r}")
            values.append(given[name])
        return make_chart(monoid, ring, values)

    def _build_denominators(self, decl) -> DenominatorSystem:
        return make_denominator_system(self.hom(decl.data["hom"]), bounds=self.bounds)

    def _build_algebra(self, decl) -> GradedRootAlgebra:
        chart = self.chart(decl.data["chart"])
        denominators = self.denominators(decl.data["denominators"])
        return build_root_algebra(chart, denominators, bounds=self.bounds)

    def _build_parabolic(self, decl) -> ParabolicSheaf:
        algebra = self.algebra(decl.data["algebra"])
        d = algebra.denominators
        ring = algebra.ring
        slots = {}
        for degree_text, rank in decl.data["slots"]:
            rep = d.parse_degree(degree_text)
            if rep not in d.fundamental_domain:
                raise InputError(f"slot degree {degree_text} is not in the fundamental domain")
            slots[rep] = RModule(ring, rank)
        for v in d.fundamental_domain:
            slots.setdefault(v, RModule(ring, 0))
        maps = {}
        for degree_text, gen, entries in decl.data["maps"]:
            rep = d.parse_degree(degree_text)
            if gen not in algebra.q_monoid.names:
                raise InputError(f"unknown generator {gen!r} in map")
            g = algebra.q_monoid.names.index(gen)
            target = d.fold(word_add(rep, algebra.x_degree(g)))[0]
            rows = len(entries)
            cols = len(entries[0]) if entries else 0
            want_rows = slots[target].rank
            want_cols = slots[rep].rank
            if rows == 0 or cols == 0:
                mat = Matrix.zero(ring, want_rows, want_cols)
                if want_rows and want_cols:
                    raise InputError("empty matrix given where a nonzero shape is required")
            else:
                if rows != want_rows or cols != want_cols:
                    raise InputError(
                        f"map at {degree_text} along {gen} has shape {rows}x{cols}, "
                        f"expected {want_rows}x{want_cols}"
                    )
                mat = Matrix(ring, rows, cols, [[parse_element(ring, e) for e in row] for row in entries])
            maps[(rep, g)] = mat
        for v in d.fundamental_domain:
            for g in range(algebra.q_monoid.num_generators):
                if (v, g) not in maps:
                    target = d.fold(word_add(v, algebra.x_degree(g)))[0]
                    if slots[v].rank and slots[target].rank:
                        raise InputError(
                            f"missing map at slot {d.degree_str(v)} along "
                            f"{algebra.q_monoid.names[g]}"
                        )
                    maps[(v, g)] = Matrix.zero(ring, slots[target].rank, slots[v].rank)
        return make_parabolic(algebra, slots, maps)

    def _build_gradedmodule(self, decl) -> GradedPresentation:
        algebra = self.algebra(decl.data["algebra"])
        d = algebra.denominators
        names = []
        degrees = []
        for gen, degree_text in decl.data["gens"]:
            if gen in names:
                raise InputError(f"duplicate generator {gen!r}")
            names.append(gen)
            degrees.append(d.parse_degree(degree_text))
        rows = [self._module_relation(algebra, names, raw) for raw in decl.data["rels"]]
        presentation = GradedPresentation(algebra, degrees, rows)
        presentation.generator_names = tuple(names)
        return presentation

    def _module_relation(self, algebra: GradedRootAlgebra, gen_names, raw: str):
        """Parse 'coef sym^k ... gen + ...' into one relation row."""
        from .poly import _tokenize as poly_tokenize

        ring = algebra.ring
        toks = poly_tokenize(raw)
        pos = 0
        r = len(algebra.degrees)
        t_index = {f"t_{n}": i for i, n in enumerate(algebra.p_monoid.names)}
        x_index = {f"x_{n}": i for i, n in enumerate(algebra.q_monoid.names)}
        entries = [[] for _ in gen_names]

        def peek():
            return toks[pos]

        def take(kind=None):
            nonlocal pos
            tok = toks[pos]
            if kind and tok.kind != kind:
                raise InputError(f"in relation {raw!r}: expected {kind}, found {tok.kind}")
            pos += 1
            return tok

        sign = 1
        while True:
            coef = ring.one()
            tvec = [0] * r
            qvec = [0] * r
            gen = None
            expect_factor = True
            while True:
                tok = peek()
                if tok.kind == "num":
                    take()
                    value = Fraction(tok.value)
                    if peek().kind == "/":
                        take()
                        value = value / take("num").value
                    coef = coef * ring.constant(value)
                elif tok.kind == "(":
                    take()
                    depth = 1
                    inner = []
                    while depth:
                        t2 = take()
                        if t2.kind == "(":
                            depth += 1
                        elif t2.kind == ")":
                            depth -= 1
                            if depth == 0:
                                break
                        inner.append(t2)
                    text = " ".join(
                        str(t.value) if t.kind in ("num", "name") else t.kind for t in inner
                    )
                    coef = coef * parse_element(ring, text)
                elif tok.kind == "name":
                    take()
                    power = 1
                    if peek().kind == "^":
                        take()
                        neg = False
                        if peek().kind == "-":
                            take()
                            neg = True
                        power = take("num").value
                        if neg:
                            power = -power
                    if tok.value in t_index:
                        tvec[t_index[tok.value]] += power
                    elif tok.value in x_index:
                        if power < 0:
                            raise InputError(f"negative power of {tok.value} in relation")
                        qvec[x_index[tok.value]] += power
                    elif tok.value in gen_names:
                        if gen is not None:
                            raise InputError(f"two generators in one term of {raw!r}")
                        gen = gen_names.index(tok.value)
                    elif tok.value in ring.variables:
                        coef = coef * ring.variable(tok.value) ** power
                    else:
                        raise InputError(f"unknown symbol {tok.value!r} in relation")
                elif tok.kind == "*":
                    take()
                else:
                    break
            if gen is None:
                raise InputError(f"term without a generator in relation {raw!r}")
            if sign < 0:
                coef = -coef
            entries[gen].append((coef, tuple(tvec), tuple(qvec)))
            tok = peek()
            if tok.kind == "+":
                take()
                sign = 1
            elif tok.kind == "-":
                take()
                sign = -1
            elif tok.kind == "end":
                break
            else:
                raise InputError(f"unexpected {tok.kind} in relation {raw!r}")
        return [tuple(e) for e in entries]


# ---------------------------------------------------------------------------
# commands


def _report(lines) -> str:
    return "\n".join(lines) + "\n"


def cmd_check_monoid(doc: Document, args) -> tuple[str, int]:
    m = doc.monoid(args.name)
    c = m.classify()
    lines = [
        "command = check-monoid",
        f"monoid = {args.name}",
        f"generators = {m.num_generators}",
        f"relations = {len(m.relations)}",
        f"rewrite_rules = {len(m.rewrite_rules)}",
        f"integral = {fmt_flag(c.integral)}",
        f"sharp = {fmt_flag(c.sharp)}",
        f"torsion_free = {fmt_flag(c.torsion_free)}",
        f"group = {fmt_group(c.group)}",
    ]
    return _report(lines), 0


def cmd_check_hom(doc: Document, args) -> tuple[str, int]:
    lines = ["command = check-hom", f"hom = {args.name}"]
    try:
        doc.hom(args.name)
    except ValidationError as err:
        lines.append("valid = false")
        lines.append(f"reason = {err}")
        return _report(lines), 1
    lines.append("valid = true")
    return _report(lines), 0


def cmd_check_kummer(doc: Document, args) -> tuple[str, int]:
    name = args.name
    if doc.kind_of(name) == "denominators":
        j = doc.hom(doc.decls[name].data["hom"])
    else:
        j = doc.hom(name)
    check = is_kummer(j, bounds=doc.bounds)
    lines = [
        "command = check-kummer",
        f"hom = {name}",
        f"kummer = {check.verdict}",
        f"injective = {fmt_flag(check.injective)}",
    ]
    if check.verdict == "true":
        d = make_denominator_system(j, bounds=doc.bounds)
        lines.append(f"index = {d.index}")
        lines.append(f"index_group = {fmt_group(d.index_group)}")
        lines.append(f"fundamental_domain_size = {len(d.fundamental_domain)}")
        lines.append(
            "fundamental_domain = "
            + ", ".join(d.degree_str(v) for v in d.fundamental_domain)
        )
        lines.append("witness:")
        for gname in j.target.names:
            m, p = check.witnesses[gname]
            lines.append(f"  {gname}: m = {m}, preimage = {j.source.word_str(p)}")
        return _report(lines), 0
    lines.append(f"reason = {check.reason}")
    return _report(lines), 1 if check.verdict == "false" else 3


def cmd_stalk(doc: Document, args) -> tuple[str, int]:
    chart = doc.chart(args.chart)
    m = chart.monoid
    lines = ["command = stalk", f"chart = {args.chart}"]
    if args.at:
        assignments = {}
        for piece in args.at.split(","):
            var, _, value = piece.partition("=")
            if not value:
                raise InputError(f"malformed point assignment {piece!r}")
            assignments[var.strip()] = Fraction(value.strip())
        point = RationalPoint.make(chart.ring, assignments)
        data = stalk_df(chart, point, bounds=doc.bounds)
        lines.append(f"at = {args.at}")
        lines.append(
            "kernel = "
            + (", ".join(m.word_str(g) for g in data.kernel.generators) or "0")
        )
        lines.append(f"minimal = {fmt_flag(data.chart_is_minimal_at_point)}")
        stalk_class = data.stalk.classify()
        lines.append(f"stalk_sharp = {fmt_flag(stalk_class.sharp)}")
        for u, v in data.stalk.relations:
            lines.append(f"stalk_relation {data.stalk.word_str(u)} = {data.stalk.word_str(v)}")
        return _report(lines), 0
    data = df_quotient(chart, bounds=doc.bounds)
    lines.append("at = generic")
    lines.append(
        "kernel = " + (", ".join(m.word_str(g) for g in data.kernel.generators) or "0")
    )
    lines.append("representatives = order-minimal normal forms")
    for name in m.names:
        lines.append(f"discrepancy {name} = {fmt_value(data.unit_discrepancies[name])}")
    for u, v in data.quotient.relations:
        lines.append(f"quotient_relation {data.quotient.word_str(u)} = {data.quotient.word_str(v)}")
    return _report(lines), 0


def cmd_build_algebra(doc: Document, args) -> tuple[str, int]:
    b = doc.algebra(args.name)
    lines = ["command = build-algebra", f"algebra = {args.name}"]
    lines.extend(algebra_lines(b))
    return _report(lines), 0


def cmd_classify_stack(doc: Document, args) -> tuple[str, int]:
    b = doc.algebra(args.name)
    c = classify_stack(b)
    lines = [
        "command = classify-stack",
        f"algebra = {args.name}",
        f"index = {c.index}",
        f"characteristic = {c.characteristic}",
        f"finite = {fmt_flag(c.finite)}",
        f"tame = {fmt_flag(c.tame)}",
        f"dm = {fmt_flag(c.dm)}",
    ]
    return _report(lines), 0


def cmd_check_parabolic(doc: Document, args) -> tuple[str, int]:
    lines = ["command = check-parabolic", f"sheaf = {args.name}"]
    try:
        e = doc.parabolic(args.name)
    except ValidationError as err:
        lines.append("valid = false")
        lines.append(f"reason = {err}")
        for key in sorted(err.locus):
            value = err.locus[key]
            if isinstance(value, Matrix):
                value = fmt_matrix(value)
            lines.append(f"  {key} = {value}")
        return _report(lines), 1
    lines.append("valid = true")
    lines.extend(sheaf_lines(e, label=args.name))
    return _report(lines), 0


def cmd_phi(doc: Document, args) -> tuple[str, int]:
    n = doc.gradedmodule(args.name)
    e = phi(n)
    lines = ["command = phi", f"module = {args.name}", "valid = true"]
    lines.extend(sheaf_lines(e, label=args.name))
    return _report(lines), 0


def cmd_psi(doc: Document, args) -> tuple[str, int]:
    e = doc.parabolic(args.name)
    n = psi(e)
    lines = ["command = psi", f"sheaf = {args.name}"]
    lines.extend(presentation_lines(n))
    return _report(lines), 0


def cmd_roundtrip(doc: Document, args) -> tuple[str, int]:
    kind = doc.kind_of(args.name)
    if kind == "parabolic":
        obj = doc.parabolic(args.name)
    elif kind == "gradedmodule":
        obj = doc.gradedmodule(args.name)
    else:
        raise InputError(f"{args.name!r} is not a parabolic sheaf or graded module")
    report = roundtrip_check(obj)
    lines = [
        "command = roundtrip",
        f"object = {args.name}",
        f"direction = {report.direction}",
        f"iso = {fmt_flag(report.iso)}",
    ]
    if report.iso:
        d = obj.algebra.denominators
        lines.append("witness:")
        for v in sorted(report.witnesses):
            lines.append(f"  slot {d.degree_str(v)}: {fmt_matrix(report.witnesses[v])}")
        return _report(lines), 0
    lines.append(f"failure = {report.failure}")
    return _report(lines), 1


def cmd_hom(doc: Document, args) -> tuple[str, int]:
    e = doc.parabolic(args.source)
    f = doc.parabolic(args.target)
    h = parabolic_hom(e, f)
    lines = ["command = hom", f"source = {args.source}", f"target = {args.target}"]
    lines.extend(sheaf_lines(h, label="hom"))
    return _report(lines), 0


def cmd_tensor(doc: Document, args) -> tuple[str, int]:
    e = doc.parabolic(args.left)
    f = doc.parabolic(args.right)
    t = parabolic_tensor(e, f)
    lines = ["command = tensor", f"left = {args.left}", f"right = {args.right}"]
    lines.extend(sheaf_lines(t, label="tensor"))
    return _report(lines), 0


def cmd_selftest(args) -> tuple[str, int]:
    from .fields import GF
    from .testkit import (
        random_parabolic_sheaf,
        random_presentation,
        random_simplicial_algebra,
    )
    from .equivalence import psi as _psi, roundtrip_phi_psi, roundtrip_psi_phi
    from .monoid import SubmonoidGens, cokernel_analyze, kernel, kernel_closure
    from math import gcd

    rng = random.Random(20100102)
    lines = ["command = selftest"]
    failures = 0

    def record(name, ok):
        nonlocal failures
        lines.append(f"{name} = {'pass' if ok else 'fail'}")
        if not ok:
            failures += 1

    # rewriting sanity: closure edges are congruences, normal forms idempotent
    ok = True
    for _ in range(15):
        m = random_presentation(rng)
        for w in word_ball(m.num_generators, 4):
            nf = m.normal_form(w)
            if m.normal_form(nf) != nf:
                ok = False
            for u, v in m.relations:
                if word_leq(u, w) and m.normal_form(word_add(word_sub(w, u), v)) != nf:
                    ok = False
    record("word_problem", ok)

    # kernel and cokernel counterexamples
    n2, n1 = FpMonoid.free(2), FpMonoid.free(1)
    addition = MonoidHom(n2, n1, [(1,), (1,)])
    res = cokernel_analyze(addition)
    closure = kernel_closure(n1, SubmonoidGens(n1, [(2,), (3,)]))
    record(
        "kernel_counterexamples",
        kernel(addition).is_trivial and res.verdict == "false" and closure.generators == ((1,),),
    )

    # kummer indices
    ok = True
    for d in (1, 2, 3):
        dd = make_denominator_system(MonoidHom(FpMonoid.free(1), FpMonoid.free(1), [(d,)]))
        ok = ok and dd.index == d and len(dd.fundamental_domain) == d
    record("kummer_indices", ok)

    # round trips on random tier-1 sheaves
    ok = True
    for _ in range(5):
        b = random_simplicial_algebra(rng, GF(5), max_rank=1, max_degree=3)
        e = random_parabolic_sheaf(rng, b, max_components=2)
        ok = ok and roundtrip_phi_psi(e).iso and roundtrip_psi_phi(_psi(e)).iso
    record("roundtrips", ok)

    # tame/DM grid
    ok = True
    for d in range(1, 7):
        for p in (2, 3, 5):
            b = random_simplicial_algebra(rng, GF(p), max_rank=1, max_degree=1)
            # rebuild with the exact degree wanted
            dd = make_denominator_system(
                MonoidHom(FpMonoid.free(1, ("a",)), FpMonoid.free(1, ("q",)), [(d,)])
            )
            ring = BaseRing(GF(p))
            bb = build_root_algebra(make_chart(FpMonoid.free(1, ("a",)), ring, [ring.one()]), dd)
            c = classify_stack(bb)
            ok = ok and c.tame and c.finite and c.dm == (gcd(d, p) == 1)
    record("stack_classification", ok)

    lines.append(f"all = {'pass' if failures == 0 else 'fail'}")
    return _report(lines), 0 if failures == 0 else 1


# ---------------------------------------------------------------------------
# entry point


def build_arg_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="logroot",
        description="Decide monoid properties, build root-stack coordinate "
        "algebras, and verify the parabolic-sheaf correspondence on "
        "declaration files.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_file=True):
        if with_file:
            p.add_argument("file", help="declaration file")
        p.add_argument("--rule-budget", type=int, default=Bounds.rule_budget)
        p.add_argument("--search-bound", type=int, default=Bounds.search_bound)
        p.add_argument("--piece-height", type=int, default=Bounds.piece_height)

    p = sub.add_parser("check-monoid", help="classify a monoid")
    common(p)
    p.add_argument("--name", required=True)
    p = sub.add_parser("check-hom", help="validate a homomorphism on relations")
    common(p)
    p.add_argument("--name", required=True)
    p = sub.add_parser("check-kummer", help="decide the Kummer property")
    common(p)
    p.add_argument("--name", required=True)
    p = sub.add_parser("stalk", help="stalk or generic kernel of a chart")
    common(p)
    p.add_argument("--chart", required=True)
    p.add_argument("--at", default=None, help="point like 's=0,u=2'")
    p = sub.add_parser("build-algebra", help="emit the graded algebra presentation")
    common(p)
    p.add_argument("--name", required=True)
    p = sub.add_parser("classify-stack", help="tame / Deligne-Mumford classification")
    common(p)
    p.add_argument("--name", required=True)
    p = sub.add_parser("check-parabolic", help="validate a parabolic sheaf")
    common(p)
    p.add_argument("--name", required=True)
    p = sub.add_parser("phi", help="graded module to parabolic sheaf")
    common(p)
    p.add_argument("--name", required=True)
    p = sub.add_parser("psi", help="parabolic sheaf to graded module")
    common(p)
    p.add_argument("--name", required=True)
    p = sub.add_parser("roundtrip", help="verify the equivalence round trip")
    common(p)
    p.add_argument("--name", required=True)
    p = sub.add_parser("hom", help="internal hom of two parabolic sheaves")
    common(p)
    p.add_argument("--source", required=True)
    p.add_argument("--target", required=True)
    p = sub.add_parser("tensor", help="tensor product of two parabolic sheaves")
    common(p)
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p = sub.add_parser("selftest", help="run the built-in smoke suite")
    common(p, with_file=False)
    return parser


_HANDLERS = {
    "check-monoid": cmd_check_monoid,
    "check-hom": cmd_check_hom,
    "check-kummer": cmd_check_kummer,
    "stalk": cmd_stalk,
    "build-algebra": cmd_build_algebra,
    "classify-stack": cmd_classify_stack,
    "check-parabolic": cmd_check_parabolic,
    "phi": cmd_phi,
    "psi": cmd_psi,
    "roundtrip": cmd_roundtrip,
    "hom": cmd_hom,
    "tensor": cmd_tensor,
}


def run(argv) -> tuple[str, int]:
    parser = build_arg_parser()
    args = parser.parse_args(argv)
    bounds = Bounds(
        rule_budget=args.rule_budget,
        search_bound=args.search_bound,
        piece_height=args.piece_height,
    )
    try:
        if args.command == "selftest":
            return cmd_selftest(args)
        try:
            with open(args.file, encoding="utf-8") as handle:
                source = handle.read()
        except OSError as err:
            raise InputError(f"cannot read {args.file}: {err}") from err
        doc = Document(source, bounds)
        return _HANDLERS[args.command](doc, args)
    except ValidationError as err:
        lines = [f"command = {args.command}", "valid = false", f"reason = {err}"]
        return _report(lines), 1
    except (InputError, UnsupportedOperationError) as err:
        return _report([f"command = {args.command}", f"error = {err}"]), 2
    except ResourceError as err:
        return _report([f"command = {args.command}", f"resource_error = {err}"]), 3


def main() -> None:
    text, code = run(sys.argv[1:])
    sys.stdout.write(text)
    sys.exit(code)


if __name__ == "__main__":
    main()
