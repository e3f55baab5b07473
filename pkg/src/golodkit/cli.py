"""Session files, subcommand dispatch, and machine-readable reports.

A session file declares a field, one ring (directly or through a
constructor over named sub-rings), and any number of named modules.
Every command reads one session, runs one computation, and prints one
structured document to stdout.  Reports are deterministic: the same
session, command, and flags produce byte-identical output.

Exit codes: 0 success, 1 validation error, 2 computation budget
exceeded, 3 internal invariant failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .analysis import (
    classify_curvature,
    curvature_from_betti,
    curvature_from_denominator,
    denominator_sign_check,
    single_pole_check,
    torvanishing_certificate,
)
from .errors import (
    BudgetExceededError,
    GolodkitError,
    InternalCheckError,
    NotArtinianError,
    ParseError,
    SessionError,
    ValidationError,
)
from .fields import GF, QQ, Field
from .intpoly import IntPolynomial, divexact
from .koszul import koszul_homology
from .parser import parse_poly
from .poly import Polynomial, PolyContext, format_polynomial
from .quotient import (
    QuotientRing,
    connected_sum,
    fiber_product,
    make_ring,
    montano_lyle_check,
    tensor_product,
    teter_quotient,
)
from .resolution import (
    ModulePresentation,
    Resolution,
    exactness_certificate,
    resolve,
)
from .series import (
    RationalSeries,
    TruncatedSeries,
    compressed_series,
    expand,
    golod_series,
    kustin_denominator,
    pade_reconstruct,
    stretched_series,
)
from .tor import tor

SCHEMA = "golodkit/1"
CONSTRUCT_KINDS = ("tensor", "fiber", "connsum", "teter")
LEMMA_TOKENS = ("m4", "m5", "240601", "sandwich", "montano-lyle")


# -- session files -----------------------------------------------------


@dataclass(frozen=True)
class ConstructSpec:
    kind: str
    operands: tuple[str, ...]


@dataclass(frozen=True)
class SessionFile:
    """A fully validated session: the ring is materialized, every module
    presentation is built over it."""

    characteristic: int
    ring: QuotientRing
    modules: dict[str, ModulePresentation]
    construct: ConstructSpec | None = None
    named_rings: dict[str, QuotientRing] = dc_field(default_factory=dict)


def _split_values(raw: str, line: int, base_col: int = 1):
    """Comma-separated values; polynomials are double-quoted.

    Returns (kind, text, column) triples, kind in {bare, quoted};
    columns are 1-based positions in the original source line.
    """
    out = []
    i, n = 0, len(raw)
    expect_item = True
    while i < n:
        c = raw[i]
        if c.isspace():
            i += 1
            continue
        if c == ",":
            if expect_item:
                raise SessionError("empty list item", line, base_col + i)
            expect_item = True
            i += 1
            continue
        if not expect_item:
            raise SessionError("expected ',' between values", line, base_col + i)
        if c == '"':
            j = raw.find('"', i + 1)
            if j < 0:
                raise SessionError("unterminated quote", line, base_col + i)
            out.append(("quoted", raw[i + 1 : j], base_col + i + 1))
            i = j + 1
        else:
            j = i
            while j < n and raw[j] not in ',"' and not raw[j].isspace():
                j += 1
            out.append(("bare", raw[i:j], base_col + i))
            i = j
        expect_item = False
    if expect_item and out:
        raise SessionError("trailing comma", line, base_col + n - 1)
    return out


def _read_sections(text: str):
    """[(line, section, label, [(line, key, value, value_col), ...]), ...]"""
    sections = []
    current = None
    for lineno, rawline in enumerate(text.splitlines(), start=1):
        line = rawline.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("["):
            if not line.endswith("]"):
                raise SessionError("malformed section header", lineno)
            inner = line[1:-1].strip()
            parts = inner.split()
            if len(parts) == 1:
                name, label = parts[0], None
            elif len(parts) == 2:
                name, label = parts
            else:
                raise SessionError("malformed section header", lineno)
            current = (lineno, name, label, [])
            sections.append(current)
            continue
        if current is None:
            raise SessionError("content before the first section header", lineno)
        if "=" not in line:
            raise SessionError("expected 'key = value'", lineno)
        key, _, value = rawline.partition("=")
        stripped = value.strip()
        vcol = len(key) + 2 + len(value) - len(value.lstrip())
        key = key.strip()
        if not key.isidentifier():
            raise SessionError(f"bad key {key!r}", lineno)
        current[3].append((lineno, key, stripped, vcol))
    return sections


def _single_values(entries, line, allowed, repeatable=()):
    seen = {}
    repeats = {key: [] for key in repeatable}
    for lineno, key, value, vcol in entries:
        if key not in allowed:
            raise SessionError(f"unknown key {key!r}", lineno)
        if key in repeats:
            repeats[key].append((lineno, value, vcol))
            continue
        if key in seen:
            raise SessionError(f"duplicate key {key!r}", lineno)
        seen[key] = (lineno, value, vcol)
    return seen, repeats


def _parse_session_poly(text: str, ring_context, line: int, column: int) -> Polynomial:
    try:
        return parse_poly(text, ring_context)
    except ParseError as exc:
        raise SessionError(str(exc), line, column + exc.position) from exc


def _build_ring(field: Field, header_line: int, entries) -> QuotientRing:
    seen, _ = _single_values(entries, header_line, {"variables", "relations"})
    if "variables" not in seen:
        raise SessionError("ring block needs a 'variables' key", header_line)
    vline, vraw, vcol = seen["variables"]
    variables = []
    for kind, text, col in _split_values(vraw, vline, vcol):
        if kind != "bare" or not text.isidentifier():
            raise SessionError(f"bad variable name {text!r}", vline, col)
        if text in variables:
            raise SessionError(f"duplicate variable {text!r}", vline, col)
        variables.append(text)
    relations = []
    if "relations" in seen:
        rline, rraw, rcol = seen["relations"]
        context = PolyContext(tuple(variables), field)
        for kind, text, col in _split_values(rraw, rline, rcol):
            if kind != "quoted":
                raise SessionError("relations must be quoted polynomial strings", rline, col)
            relations.append(_parse_session_poly(text, context, rline, col))
        try:
            return make_ring(field, variables, relations)
        except (ValidationError, NotArtinianError) as exc:
            raise SessionError(str(exc), rline) from exc
    try:
        return make_ring(field, variables, ())
    except ValidationError as exc:
        raise SessionError(str(exc), vline) from exc


def _build_module(
    ring: QuotientRing, name: str, header_line: int, entries
) -> ModulePresentation:
    seen, repeats = _single_values(
        entries, header_line, {"ideal", "degrees", "column"}, repeatable=("column",)
    )
    columns_raw = repeats["column"]
    if "ideal" in seen and ("degrees" in seen or columns_raw):
        raise SessionError(
            "module block mixes 'ideal' with an explicit presentation", header_line
        )
    if "ideal" in seen:
        iline, iraw, icol = seen["ideal"]
        gens = []
        for kind, text, col in _split_values(iraw, iline, icol):
            if kind != "quoted":
                raise SessionError("ideal generators must be quoted strings", iline, col)
            gens.append(_parse_session_poly(text, ring.context, iline, col))
        try:
            return ModulePresentation.cyclic(ring, gens, label=name)
        except ValidationError as exc:
            raise SessionError(str(exc), iline) from exc
    if "degrees" not in seen:
        raise SessionError(
            "module block needs 'ideal' or 'degrees' (+ 'column' lines)", header_line
        )
    dline, draw, dcol = seen["degrees"]
    degrees = []
    for kind, text, col in _split_values(draw, dline, dcol):
        try:
            degrees.append(int(text))
        except ValueError:
            raise SessionError(f"bad generator degree {text!r}", dline, col) from None
    columns = []
    for cline, craw, ccol in columns_raw:
        entries_parsed = []
        for kind, text, col in _split_values(craw, cline, ccol):
            if kind != "quoted":
                raise SessionError("matrix entries must be quoted strings", cline, col)
            entries_parsed.append(
                ring.element(_parse_session_poly(text, ring.context, cline, col))
            )
        if len(entries_parsed) != len(degrees):
            raise SessionError(
                f"column has {len(entries_parsed)} entries for {len(degrees)} generators",
                cline,
            )
        columns.append(tuple(entries_parsed))
    try:
        return ModulePresentation(ring, tuple(degrees), tuple(columns), label=name)
    except ValidationError as exc:
        raise SessionError(str(exc), header_line) from exc


def load_session(path: str) -> SessionFile:
    """Parse and validate one session file; materializes every ring."""
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ValidationError(f"cannot read session file {path}: {exc}") from exc

    characteristic = 0
    plain_ring = None
    named_specs: dict[str, tuple[int, list]] = {}
    module_specs: list[tuple[str, int, list]] = []
    construct_spec = None
    seen_field = seen_ring = seen_construct = False

    for header_line, section, label, entries in _read_sections(text):
        if section == "field":
            if seen_field:
                raise SessionError("duplicate [field] section", header_line)
            seen_field = True
            seen, _ = _single_values(entries, header_line, {"characteristic"})
            if "characteristic" in seen:
                cline, craw, _ccol = seen["characteristic"]
                try:
                    characteristic = int(craw)
                except ValueError:
                    raise SessionError(
                        f"bad characteristic {craw!r}", cline
                    ) from None
        elif section == "ring":
            if label is None:
                if seen_ring:
                    raise SessionError("duplicate [ring] section", header_line)
                seen_ring = True
                plain_ring = (header_line, entries)
            else:
                if not label.isidentifier():
                    raise SessionError(f"bad ring name {label!r}", header_line)
                if label in named_specs:
                    raise SessionError(f"duplicate ring {label!r}", header_line)
                named_specs[label] = (header_line, entries)
        elif section == "module":
            if label is None:
                raise SessionError("module section needs a name", header_line)
            if not label.isidentifier():
                raise SessionError(f"bad module name {label!r}", header_line)
            if label == "k":
                raise SessionError(
                    "module name 'k' is reserved for the residue field", header_line
                )
            if any(label == existing for existing, _, _ in module_specs):
                raise SessionError(f"duplicate module {label!r}", header_line)
            module_specs.append((label, header_line, entries))
        elif section == "construct":
            if seen_construct:
                raise SessionError("duplicate [construct] section", header_line)
            seen_construct = True
            construct_spec = (header_line, entries)
        else:
            raise SessionError(f"unknown section [{section}]", header_line)

    try:
        field = QQ if characteristic == 0 else GF(characteristic)
    except GolodkitError as exc:
        raise ValidationError(str(exc)) from exc

    if plain_ring is not None and construct_spec is not None:
        raise SessionError(
            "session has both a [ring] and a [construct] section",
            construct_spec[0],
        )
    if plain_ring is None and construct_spec is None:
        raise ValidationError("session declares no [ring] or [construct] section")
    if plain_ring is not None and named_specs:
        first = min(line for line, _ in named_specs.values())
        raise SessionError("named rings require a [construct] section", first)

    named_rings = {
        name: _build_ring(field, line, entries)
        for name, (line, entries) in named_specs.items()
    }

    construct = None
    if construct_spec is not None:
        cline, centries = construct_spec
        seen, _ = _single_values(centries, cline, {"kind", "left", "right", "source"})
        if "kind" not in seen:
            raise SessionError("construct block needs a 'kind' key", cline)
        kline, kind, _kcol = seen["kind"]
        if kind not in CONSTRUCT_KINDS:
            raise SessionError(f"unknown construct kind {kind!r}", kline)

        def _operand(key):
            if key not in seen:
                raise SessionError(f"construct kind {kind!r} needs {key!r}", cline)
            oline, name, _ocol = seen[key]
            if name not in named_rings:
                raise SessionError(f"unknown ring {name!r}", oline)
            return name

        try:
            if kind == "teter":
                source = _operand("source")
                ring = teter_quotient(named_rings[source])
                construct = ConstructSpec(kind, (source,))
            else:
                left, right = _operand("left"), _operand("right")
                builder = {
                    "tensor": tensor_product,
                    "fiber": fiber_product,
                    "connsum": connected_sum,
                }[kind]
                ring = builder(named_rings[left], named_rings[right])
                construct = ConstructSpec(kind, (left, right))
        except ValidationError as exc:
            raise SessionError(str(exc), cline) from exc
    else:
        ring = _build_ring(field, plain_ring[0], plain_ring[1])

    modules = {
        name: _build_module(ring, name, line, entries)
        for name, line, entries in module_specs
    }
    return SessionFile(
        characteristic=characteristic,
        ring=ring,
        modules=modules,
        construct=construct,
        named_rings=named_rings,
    )


# -- shared report helpers ---------------------------------------------


def _frac(x: Fraction) -> str:
    return str(Fraction(x))


def _module_of(session: SessionFile, name: str) -> ModulePresentation:
    if name == "k":
        return ModulePresentation.residue_field(session.ring)
    if name not in session.modules:
        known = ", ".join(sorted(session.modules) or ("none",))
        raise ValidationError(f"unknown module {name!r} (session defines: {known})")
    return session.modules[name]


def _certified_resolve(
    session: SessionFile, M: ModulePresentation, steps: int, ledger: list
) -> Resolution:
    res = resolve(session.ring, M, steps, with_kernel=True)
    cert = exactness_certificate(res)
    entry = {
        "module": M.label or "?",
        "steps": res.steps,
        "complete": res.complete,
        "minimal": cert.minimal,
        "composes_to_zero": cert.composes_to_zero,
        "euler_ok": cert.euler_ok,
        "ok": cert.ok,
    }
    if res.note:
        entry["note"] = res.note
    ledger.append(entry)
    if not res.complete:
        return res
    if not cert.ok:
        raise InternalCheckError(
            f"resolution self-check failed for {M.label}: {'; '.join(cert.failures)}"
        )
    return res


def _series_fields(rs: RationalSeries) -> dict:
    out = {
        "numerator": str(rs.numerator),
        "denominator": str(rs.denominator),
        "provenance": rs.provenance,
        "d_at_one": rs.denominator_at_one,
    }
    if rs.full_denominator is not None:
        out["full_denominator"] = str(rs.full_denominator)
        out["full_d_at_one"] = rs.full_denominator_at_one
    return out


def _reconstruct(coeffs, order):
    # searches the whole feasible triangle dp + dq < order, smallest
    # denominator degree first; every attempt keeps one surplus coefficient
    ts = TruncatedSeries(tuple(coeffs))
    for dq in range(order):
        rs = pade_reconstruct(ts, order - 1 - dq, dq)
        if rs is not None:
            return rs
    return None


def _common_denominator(session: SessionFile, order: int, ledger: list, warnings: list):
    """(1+t)^edim times the reduced denominator of the residue-field
    series, with the reduced numerator divided back out."""
    k = ModulePresentation.residue_field(session.ring)
    res = _certified_resolve(session, k, order, ledger)
    if not res.complete:
        raise BudgetExceededError(0, 0, "residue-field resolution (raise GOLODKIT_MAX_MATRIX)")
    rs = _reconstruct(res.betti.totals, order)
    if rs is None:
        raise ValidationError(
            "no rational form for the residue-field series within degree "
            f"bounds {order // 2}/{order // 2}; raise --order"
        )
    one_plus_t = IntPolynomial.of([1, 1]) ** session.ring.nvars
    try:
        d_full = divexact(one_plus_t * rs.denominator, rs.numerator)
    except ValidationError as exc:
        raise ValidationError(
            "series numerator does not divide (1+t)^edim; no common "
            "denominator in the standard form"
        ) from exc
    return d_full, rs, res


def _curvature_result(est) -> dict:
    out = {
        "kind": est.kind,
        "source": est.source,
        "low": _frac(est.low),
        "high": _frac(est.high),
        "exact": _frac(est.exact) if est.exact is not None else None,
    }
    if est.pole is not None:
        out["pole"] = [_frac(est.pole[0]), _frac(est.pole[1])]
    if est.kind == "heuristic-only":
        out["ratios"] = [_frac(r) for r in est.ratios]
        out["root_powers"] = [[_frac(a), _frac(b)] for a, b in est.root_powers]
    return out


# -- command handlers --------------------------------------------------


def _cmd_invariants(session, args):
    inv = session.ring.invariants()
    result = {
        "characteristic": session.characteristic,
        "variables": list(session.ring.context.variables),
        "relations": [format_polynomial(p) for p in session.ring.relations],
        "edim": inv.edim,
        "dimension": inv.dimension,
        "codim": inv.codim,
        "length": inv.length,
        "multiplicity": inv.multiplicity,
        "socle_degree": inv.socle_degree,
        "loewy_length": inv.loewy_length,
        "socle_dimension": inv.socle_dimension,
        "gorenstein": inv.gorenstein,
        "hilbert": list(inv.hilbert),
    }
    return result, [], [], 0


def _cmd_hilbert(session, args):
    hf = session.ring.hilbert_function()
    result = {
        "hilbert": list(hf),
        "by_degree": [[d, v] for d, v in enumerate(hf)],
        "length": sum(hf),
    }
    return result, [], [], 0


def _cmd_resolve(session, args):
    M = _module_of(session, args.module)
    ledger: list = []
    res = _certified_resolve(session, M, args.steps, ledger)
    result = {
        "module": args.module,
        "steps": res.steps,
        "betti": list(res.betti.totals),
        "graded": [
            [i, j, dim]
            for i, row in enumerate(res.betti.graded)
            for j, dim in row.items()
        ],
        "complete": res.complete,
    }
    warnings = []
    if not res.complete:
        result["note"] = res.note
        warnings.append("partial result: matrix budget exceeded")
    return result, ledger, warnings, 0 if res.complete else 2


def _cmd_poincare(session, args):
    M = _module_of(session, args.module)
    ledger: list = []
    res = _certified_resolve(session, M, args.order, ledger)
    coeffs = list(res.betti.totals)
    result = {
        "module": args.module,
        "order": args.order,
        "coefficients": coeffs,
        "complete": res.complete,
    }
    warnings = []
    if not res.complete:
        result["note"] = res.note
        result["reconstruction"] = None
        warnings.append("partial result: matrix budget exceeded")
        return result, ledger, warnings, 2
    rs = _reconstruct(coeffs, args.order)
    result["reconstruction"] = _series_fields(rs) if rs is not None else None
    if rs is None:
        warnings.append("no rational form within degree bounds; raw coefficients only")
    return result, ledger, warnings, 0


def _cmd_koszul(session, args):
    kh = koszul_homology(session.ring)
    result = {
        "edim": kh.edim,
        "ranks": list(kh.ranks),
        "graded": [
            [i, d, h] for i, row in enumerate(kh.graded) for d, h in row
        ],
    }
    return result, [], [], 0


def _cmd_tor(session, args):
    left = _module_of(session, args.left)
    right = _module_of(session, args.right)
    ledger: list = []
    res = _certified_resolve(session, left, args.max + 1, ledger)
    if not res.complete:
        raise BudgetExceededError(0, 0, f"resolution of {args.left} (note: {res.note})")
    table = tor(session.ring, left, right, args.max, resolution=res)
    result = {
        "left": args.left,
        "right": args.right,
        "max": args.max,
        "dims": list(table.dims),
        "graded": [
            [i, d, dim] for i, row in enumerate(table.graded) for d, dim in row
        ],
        "vanishes_from_1": all(v == 0 for v in table.dims[1:]),
    }
    return result, ledger, [], 0


def _cmd_denominator(session, args):
    cls = args.cls
    warnings: list = []
    ledger: list = []
    if cls == "golod":
        kh = koszul_homology(session.ring)
        rs = golod_series(kh.edim, kh.ranks)
        result = {"class": cls, "koszul_ranks": list(kh.ranks), **_series_fields(rs)}
    elif cls == "compressed":
        kh = koszul_homology(session.ring)
        pqr = IntPolynomial.of(kh.ranks)
        rs = compressed_series(session.ring.nvars, pqr)
        result = {
            "class": cls,
            "koszul_poly": str(pqr),
            **_series_fields(rs),
        }
    elif cls == "stretched":
        rs = stretched_series(session.ring.nvars)
        result = {"class": cls, "edim": session.ring.nvars, **_series_fields(rs)}
    elif cls == "kustin":
        if args.n is None or args.char is None:
            raise ValidationError("kustin class needs --n and --char")
        d = kustin_denominator(args.n, args.char)
        result = {
            "class": cls,
            "n": args.n,
            "char": args.char,
            "denominator": str(d),
            "d_at_one": int(d(1)),
        }
        return result, ledger, warnings, 0
    else:  # pade
        M = _module_of(session, args.module)
        res = _certified_resolve(session, M, args.order, ledger)
        if not res.complete:
            raise BudgetExceededError(0, 0, f"resolution of {args.module}")
        rs = _reconstruct(res.betti.totals, args.order)
        result = {
            "class": cls,
            "module": args.module,
            "order": args.order,
            "coefficients": list(res.betti.totals),
            "reconstruction": _series_fields(rs) if rs is not None else None,
        }
        if rs is None:
            warnings.append("no rational form within degree bounds")
        return result, ledger, warnings, 0
    warnings.extend(rs.warnings)
    return result, ledger, warnings, 0


def _cmd_curvature(session, args):
    M = _module_of(session, args.module)
    ledger: list = []
    warnings: list = []
    res = _certified_resolve(session, M, args.order, ledger)
    if not res.complete:
        raise BudgetExceededError(0, 0, f"resolution of {args.module}")
    coeffs = res.betti.totals
    rs = _reconstruct(coeffs, args.order)
    if rs is not None:
        est = curvature_from_denominator(rs)
        result = {
            "module": args.module,
            "series": _series_fields(rs),
            **_curvature_result(est),
        }
    else:
        est = curvature_from_betti(TruncatedSeries(tuple(coeffs)))
        result = {"module": args.module, "series": None, **_curvature_result(est)}
        warnings.append(
            "no exact rational form; estimate is heuristic-only and certifies nothing"
        )
    return result, ledger, warnings, 0


def _cmd_certify(session, args):
    ledger: list = []
    warnings: list = []
    d_full, rs, _ = _common_denominator(session, args.order, ledger, warnings)
    cert = torvanishing_certificate(
        d_full, "pade-reconstructed", args.assert_generalized_golod
    )
    result = {
        "verdict": cert.verdict,
        "d_at_one": cert.d_at_one,
        "denominator": str(d_full),
        "provenance": cert.provenance,
        "asserted": cert.asserted,
        "rationale": cert.rationale,
        "series": _series_fields(rs),
    }
    return result, ledger, warnings, 0


def _cmd_construct(session, args):
    if session.construct is None:
        raise ValidationError("session has no [construct] section")
    if session.construct.kind != args.kind:
        raise ValidationError(
            f"session constructs {session.construct.kind!r}, not {args.kind!r}"
        )
    inv = session.ring.invariants()
    result = {
        "kind": session.construct.kind,
        "operands": list(session.construct.operands),
        "variables": list(session.ring.context.variables),
        "relations": [format_polynomial(p) for p in session.ring.relations],
        "edim": inv.edim,
        "length": inv.length,
        "socle_degree": inv.socle_degree,
        "gorenstein": inv.gorenstein,
        "hilbert": list(inv.hilbert),
    }
    return result, [], [], 0


def _cmd_check(session, args):
    lemma = args.lemma
    ledger: list = []
    warnings: list = []
    if lemma == "m4":
        d_full, _, _ = _common_denominator(session, args.order, ledger, warnings)
        ok, count = single_pole_check(d_full)
        result = {
            "lemma": lemma,
            "denominator": str(d_full),
            "root_count": count,
            "ok": ok,
        }
    elif lemma == "240601":
        d_full, _, _ = _common_denominator(session, args.order, ledger, warnings)
        value, nonpositive = denominator_sign_check(d_full)
        result = {
            "lemma": lemma,
            "denominator": str(d_full),
            "d_at_one": value,
            "ok": nonpositive,
        }
    elif lemma == "m5":
        M = _module_of(session, args.module)
        res_m = _certified_resolve(session, M, args.order, ledger)
        k = ModulePresentation.residue_field(session.ring)
        res_k = _certified_resolve(session, k, args.order, ledger)
        if not (res_m.complete and res_k.complete):
            raise BudgetExceededError(0, 0, "resolutions for classification")
        rs_m = _reconstruct(res_m.betti.totals, args.order)
        rs_k = _reconstruct(res_k.betti.totals, args.order)
        if rs_m is None or rs_k is None:
            raise ValidationError(
                "classification needs exact rational forms for the module "
                "and the residue field; raise --order"
            )
        est_m = curvature_from_denominator(rs_m)
        est_k = curvature_from_denominator(rs_k)
        tag = classify_curvature(est_m, est_k)
        result = {
            "lemma": lemma,
            "module": args.module,
            "tag": tag,
            "module_curvature": _curvature_result(est_m),
            "k_curvature": _curvature_result(est_k),
            "ok": tag != "violation",
        }
    elif lemma == "sandwich":
        kh = koszul_homology(session.ring)
        k = ModulePresentation.residue_field(session.ring)
        res = _certified_resolve(session, k, args.order, ledger)
        if not res.complete:
            raise BudgetExceededError(0, 0, "residue-field resolution")
        actual = list(res.betti.totals)
        e = kh.edim
        h1 = kh.rank(1)
        one_plus_t = IntPolynomial.of([1, 1])
        lower_rs = RationalSeries.make(
            one_plus_t**e, IntPolynomial.of([1, 0, -1]) ** h1, "user-asserted"
        )
        upper_rs = golod_series(e, kh.ranks)
        lower = list(expand(lower_rs, args.order).coefficients)
        upper = list(expand(upper_rs, args.order).coefficients)
        ok = all(
            lower[n] <= actual[n] <= upper[n] for n in range(args.order + 1)
        )
        result = {
            "lemma": lemma,
            "order": args.order,
            "lower": lower,
            "actual": actual,
            "upper": upper,
            "golod_attained": actual == upper,
            "ok": ok,
        }
    else:  # montano-lyle
        mb = montano_lyle_check(session.ring)
        result = {
            "lemma": lemma,
            "multiplicity": mb.multiplicity,
            "codim": mb.codim,
            "loewy_length": mb.loewy_length,
            "bound": mb.bound,
            "holds": mb.holds,
            "strict_bound": mb.strict_bound,
            "holds_strict": mb.holds_strict,
            "ok": mb.holds,
        }
    return result, ledger, warnings, 0


_COMMANDS = {
    "invariants": _cmd_invariants,
    "hilbert": _cmd_hilbert,
    "resolve": _cmd_resolve,
    "poincare": _cmd_poincare,
    "koszul": _cmd_koszul,
    "tor": _cmd_tor,
    "denominator": _cmd_denominator,
    "curvature": _cmd_curvature,
    "certify": _cmd_certify,
    "construct": _cmd_construct,
    "check": _cmd_check,
}


# -- output ------------------------------------------------------------


def _flat(value) -> str:
    if value is None:
        return "null"
    if value is True:
        return "true"
    if value is False:
        return "false"
    if isinstance(value, dict):
        return "{}"
    if isinstance(value, list):
        return "[" + ", ".join(_flat(v) for v in value) + "]"
    return str(value)


def _is_scalarish(value) -> bool:
    if isinstance(value, dict):
        return not value
    if isinstance(value, list):
        return all(not isinstance(v, dict) for v in value) and len(_flat(value)) <= 72
    return True


def _render_text(value, indent=0) -> list[str]:
    pad = "  " * indent
    lines = []
    if isinstance(value, dict):
        for key, v in value.items():
            if _is_scalarish(v):
                lines.append(f"{pad}{key}: {_flat(v)}")
            else:
                lines.append(f"{pad}{key}:")
                lines.extend(_render_text(v, indent + 1))
    elif isinstance(value, list):
        for item in value:
            if _is_scalarish(item):
                lines.append(f"{pad}- {_flat(item)}")
            else:
                lines.append(f"{pad}-")
                lines.extend(_render_text(item, indent + 1))
    else:
        lines.append(f"{pad}{_flat(value)}")
    return lines


def _emit(doc: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(doc, indent=2))
    else:
        print("\n".join(_render_text(doc)))


def _flag_echo(args) -> dict:
    skip = {"command", "session", "format"}
    out = {}
    for key in sorted(vars(args)):
        if key in skip:
            continue
        value = getattr(args, key)
        if value is not None:
            out[key] = value
    return out


# -- argument parsing and entry point ----------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit(2); remap to validation
        raise ValidationError(message)


def _add_common(parser: argparse.ArgumentParser, top: bool) -> None:
    # accepted both before and after the subcommand
    parser.add_argument(
        "--session",
        default=None if top else argparse.SUPPRESS,
        help="path to a session file",
    )
    parser.add_argument(
        "--format",
        choices=("json", "text"),
        default="json" if top else argparse.SUPPRESS,
        help="report format",
    )


def _build_parser() -> _Parser:
    parser = _Parser(prog="golodkit", description=__doc__)
    _add_common(parser, top=True)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_parser(name, **kw):
        p = sub.add_parser(name, **kw)
        _add_common(p, top=False)
        return p

    add_parser("invariants", help="numerical invariants of the session ring")
    add_parser("hilbert", help="Hilbert function of the session ring")

    p = add_parser("resolve", help="minimal free resolution prefix")
    p.add_argument("--module", required=True)
    p.add_argument("--steps", type=int, required=True)

    p = add_parser("poincare", help="Betti coefficients and rational form")
    p.add_argument("--module", default="k")
    p.add_argument("--order", type=int, default=8)

    add_parser("koszul", help="Koszul homology ranks of the session ring")

    p = add_parser("tor", help="Tor dimensions of two session modules")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.add_argument("--max", type=int, required=True)

    p = add_parser("denominator", help="denominator from a class formula")
    p.add_argument(
        "--class",
        dest="cls",
        required=True,
        choices=("golod", "compressed", "stretched", "kustin", "pade"),
    )
    p.add_argument("--n", type=int)
    p.add_argument("--char", type=int)
    p.add_argument("--module", default="k")
    p.add_argument("--order", type=int, default=8)

    p = add_parser("curvature", help="growth rate of a module's Betti sequence")
    p.add_argument("--module", default="k")
    p.add_argument("--order", type=int, default=8)

    p = add_parser("certify", help="Tor-vanishing certificate for the ring")
    p.add_argument("--assert-generalized-golod", action="store_true")
    p.add_argument("--order", type=int, default=8)

    p = add_parser("construct", help="report the session's constructed ring")
    p.add_argument("kind", choices=CONSTRUCT_KINDS)

    p = add_parser("check", help="run one of the named property checks")
    p.add_argument("--lemma", required=True, choices=LEMMA_TOKENS)
    p.add_argument("--module", default="k")
    p.add_argument("--order", type=int, default=8)

    return parser


def _error_doc(command, exc, code) -> dict:
    return {
        "schema": SCHEMA,
        "command": command,
        "error": {"type": type(exc).__name__, "message": str(exc)},
        "exit_code": code,
    }


def main(argv=None) -> int:
    try:
        args = _build_parser().parse_args(argv)
        if args.session is None:
            raise ValidationError("--session is required")
    except ValidationError as exc:
        _emit(_error_doc(None, exc, 1), "json")
        return 1
    fmt = args.format
    command = args.command
    try:
        session = load_session(args.session)
        result, ledger, warnings, code = _COMMANDS[command](session, args)
    except BudgetExceededError as exc:
        _emit(_error_doc(command, exc, 2), fmt)
        return 2
    except InternalCheckError as exc:
        _emit(_error_doc(command, exc, 3), fmt)
        return 3
    except GolodkitError as exc:
        _emit(_error_doc(command, exc, 1), fmt)
        return 1
    doc = {
        "schema": SCHEMA,
        "command": command,
        "flags": _flag_echo(args),
        "result": result,
        "ledger": ledger,
        "warnings": warnings,
    }
    _emit(doc, fmt)
    return code


if __name__ == "__main__":
    sys.exit(main())
