"""Deterministic command-line front end.

Output contract (records mode): one ``key=value`` record per line, keys in
the fixed order documented per command in the README; weights are bracketed
comma-separated rationals like ``[1,0]`` or ``[3/2]``; group elements are
``t[<root coords>]*<word>`` with the aliases ``e`` (identity) and ``saff``
(reflection through the level wall) accepted on input.  ``json-lines`` mode
prints one JSON object per line carrying the same field names and values.

Exit codes: 0 success, 1 domain error (one-line ``error: ...`` diagnostic on
stderr), 2 usage error.  The dimension guard for tensor computations is, in
order of precedence: ``--cap``, the ``AFFTRANS_CAP`` environment variable,
then the library default.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from fractions import Fraction

from . import affine, annihilator, finchar, translate, weyl
from .affine import AffineWeylElement, Level
from .errors import AfftransError, DatumInvalidError, DomainError, InvalidRootSystemError
from .rootsys import RootSystem, RootSystemSpec, Weight, build_root_system, root_coords


class UsageError(Exception):
    """Malformed invocation detected after argparse (exit code 2)."""


# ---------------------------------------------------------------------------
# argument parsing helpers

def _type_arg(text: str) -> RootSystem:
    try:
        return build_root_system(RootSystemSpec.parse(text))
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _weight_arg(text: str):
    t = text.strip()
    if not (t.startswith("[") and t.endswith("]")):
        raise argparse.ArgumentTypeError(
            f"malformed weight {text!r}: expected [a,b,...]")
    coords = []
    inner = t[1:-1].strip()
    if inner:
        for tok in inner.split(","):
            tok = tok.strip()
            try:
                coords.append(Fraction(tok))
            except (ValueError, ZeroDivisionError):
                raise argparse.ArgumentTypeError(
                    f"malformed weight {text!r}: bad entry {tok!r}") from None
    return tuple(coords)


def _resolve_level(args, rs: RootSystem):
    raw_level = getattr(args, "level", None)
    raw_k = getattr(args, "k", None)
    if raw_level is None and raw_k is None:
        return None
    raw = raw_level if raw_level is not None else raw_k
    try:
        value = Fraction(raw)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"malformed level {raw!r}") from None
    if raw_k is not None:
        value += rs.dual_coxeter
    return Level.from_shifted(value)


def _require_level(args, rs: RootSystem) -> Level:
    level = _resolve_level(args, rs)
    if level is None:
        raise UsageError(f"'{args.command}' requires --level or --k")
    return level


def _warn_lattice(rs: RootSystem, level) -> None:
    if level is not None and level.q > 1 and not rs.is_simply_laced:
        print(f"warning: {rs.spec} at level {level}: denominators > 1 mix "
              "long- and short-root wall spacings; the long-root "
              "normalisation is used throughout", file=sys.stderr)


def _resolve_cap(args) -> int:
    if args.cap is not None:
        return args.cap
    env = os.environ.get("AFFTRANS_CAP")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"malformed AFFTRANS_CAP value {env!r}") from None
    return finchar.DEFAULT_CAP


_TRANS_RE = re.compile(r"^t\[([^\]]*)\]$")
_WORD_RE = re.compile(r"^(?:s[1-9][0-9]*)+$")


def _parse_element(rs: RootSystem, level, text: str) -> AffineWeylElement:
    t = text.strip()
    if not t:
        raise UsageError("empty group element")
    if t == "e":
        return affine.identity_element(rs.rank)
    if t == "saff":
        if level is None:
            raise UsageError("element 'saff' needs a level")
        return affine.theta_wall_reflection(rs, level)
    parts = t.split("*")
    trans = Weight.zero(rs.rank)
    index = 0
    match = _TRANS_RE.match(parts[0])
    if match:
        toks = [x.strip() for x in match.group(1).split(",")] if match.group(1).strip() else []
        if len(toks) != rs.rank:
            raise UsageError(
                f"translation {parts[0]!r} has wrong rank for {rs.spec}")
        try:
            rc = [int(x) for x in toks]
        except ValueError:
            raise UsageError(f"malformed translation {parts[0]!r}") from None
        trans = Weight(sum(rs.cartan[r][i] * rc[i] for i in range(rs.rank))
                       for r in range(rs.rank))
        index = 1
    word = weyl.IDENTITY
    if index < len(parts):
        if len(parts) - index > 1:
            raise UsageError(f"malformed element {text!r}")
        wtext = parts[index]
        if not _WORD_RE.match(wtext):
            raise UsageError(f"malformed element {text!r}: bad token {wtext!r}")
        letters = [int(x) - 1 for x in re.findall(r"s([0-9]+)", wtext)]
        if any(not 0 <= letter < rs.rank for letter in letters):
            raise UsageError(
                f"element {text!r} uses a generator outside s1..s{rs.rank}")
        word = weyl.canonical_from_word(rs, letters)
    return AffineWeylElement(trans, word)


def _split_terms(text: str):
    """Split on commas that are not inside brackets."""
    parts, depth, current = [], 0, []
    for ch in text:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(current))
            current = []
        else:
            current.append(ch)
    parts.append("".join(current))
    return parts


def _parse_char_terms(rs: RootSystem, level, text: str) -> dict:
    coeffs: dict = {}
    t = text.strip()
    if not t:
        return coeffs
    for term in _split_terms(t):
        term = term.strip()
        if ":" not in term:
            raise UsageError(f"malformed character term {term!r}: "
                             "expected <element>:<integer>")
        elt_text, _, coeff_text = term.rpartition(":")
        try:
            coeff = int(coeff_text.strip())
        except ValueError:
            raise UsageError(
                f"malformed coefficient {coeff_text.strip()!r}") from None
        g = _parse_element(rs, level, elt_text)
        coeffs[g] = coeffs.get(g, 0) + coeff
    return coeffs


# ---------------------------------------------------------------------------
# output formatting

def _element_text(rs: RootSystem, g: AffineWeylElement) -> str:
    if g.is_identity:
        return "e"
    parts = []
    if any(g.translation):
        rc = root_coords(rs, g.translation)
        parts.append("t[" + ",".join(str(c) for c in rc) + "]")
    if g.finite.word:
        parts.append(str(g.finite))
    return "*".join(parts)


def _fmt_value(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, Weight):
        return str(v)
    if isinstance(v, (int, Fraction, Level)):
        return str(v)
    if isinstance(v, str):
        return json.dumps(v) if (" " in v or not v) else v
    raise TypeError(f"unformattable value {v!r}")


def _json_value(v):
    if isinstance(v, bool) or isinstance(v, int):
        return v
    if isinstance(v, (Weight, Fraction, Level)):
        return str(v)
    return v


def _emit(rows, mode: str) -> int:
    for row in rows:
        if mode == "records":
            print(" ".join(f"{key}={_fmt_value(value)}" for key, value in row))
        else:
            print(json.dumps({key: _json_value(value) for key, value in row}))
    return 0


def _sort_key(rs: RootSystem, g: AffineWeylElement):
    return (root_coords(rs, g.translation), g.finite.word)


# ---------------------------------------------------------------------------
# command handlers

def _cmd_info(args) -> int:
    rs = args.type
    level = _resolve_level(args, rs)
    _warn_lattice(rs, level)
    row = [("type", str(rs.spec)), ("rank", rs.rank),
           ("simply_laced", rs.is_simply_laced),
           ("positive_roots", len(rs.positive_roots)),
           ("dual_coxeter", rs.dual_coxeter), ("theta", rs.theta)]
    if level is not None:
        row += [("level", level), ("k", level.k(rs)),
                ("alcove_weights", len(affine.enumerate_dominant(rs, level)))]
    return _emit([row], args.format)


def _cmd_orbit(args) -> int:
    rs = args.type
    level = _resolve_level(args, rs)
    _warn_lattice(rs, level)
    wt = Weight(args.weight)
    if level is None:
        rows = [[("weight", w)] for w in sorted(weyl.orbit(rs, wt))]
    else:
        if args.bound is None:
            raise UsageError("orbit enumeration at a level requires --bound")
        pairs = affine.dominant_orbit(rs, wt, level, args.bound)
        rows = [[("weight", nu), ("g", _element_text(rs, g))]
                for g, nu in pairs]
    return _emit(rows, args.format)


def _cmd_alcove(args) -> int:
    rs = args.type
    level = _require_level(args, rs)
    _warn_lattice(rs, level)
    rep, g, regular = affine.alcove_rep(rs, Weight(args.weight), level)
    row = [("rep", rep), ("g", _element_text(rs, g)), ("regular", regular)]
    return _emit([row], args.format)


def _cmd_dominant(args) -> int:
    rs = args.type
    level = _require_level(args, rs)
    _warn_lattice(rs, level)
    rows = [[("weight", w)] for w in affine.enumerate_dominant(rs, level)]
    return _emit(rows, args.format)


def _cmd_tensor(args) -> int:
    rs = args.type
    cap = _resolve_cap(args)
    op = finchar.tensor_oracle if args.oracle else finchar.tensor_decompose
    parts = op(rs, Weight(args.lam), Weight(args.mu), cap=cap)
    rows = [[("nu", nu), ("mult", m)] for nu, m in parts.items()]
    return _emit(rows, args.format)


def _cmd_filtration(args) -> int:
    rs = args.type
    cap = _resolve_cap(args)
    if args.verma:
        parts = translate.verma_filtration(rs, Weight(args.lam),
                                           Weight(args.mu), cap=cap)
    else:
        parts = translate.kl_weyl_filtration(rs, Weight(args.lam),
                                             Weight(args.mu), cap=cap)
    rows = [[("nu", nu), ("mult", m)] for nu, m in parts.items()]
    return _emit(rows, args.format)


def _cmd_datum(args) -> int:
    rs = args.type
    level = _require_level(args, rs)
    _warn_lattice(rs, level)
    try:
        translate.check_datum(rs, Weight(args.lam_left), Weight(args.lam_right),
                              Weight(args.lam), level)
    except DatumInvalidError as exc:
        return _emit([[("valid", False), ("reason", str(exc))]], args.format)
    return _emit([[("valid", True)]], args.format)


def _cmd_translate_weyl(args) -> int:
    rs = args.type
    level = _require_level(args, rs)
    _warn_lattice(rs, level)
    cap = _resolve_cap(args)
    g = _parse_element(rs, level, args.element)
    op = translate.translate_verma if args.verma else translate.translate_weyl
    image = op(rs, g, Weight(args.src), Weight(args.dst), level, cap=cap)
    return _emit([[("image", image)]], args.format)


def _cmd_translate_char(args) -> int:
    rs = args.type
    level = _require_level(args, rs)
    _warn_lattice(rs, level)
    coeffs = _parse_char_terms(rs, level, args.char)
    chi = translate.make_character(rs, Weight(args.src), coeffs, level)
    out = translate.translate_character(rs, chi, Weight(args.dst))
    saff = affine.theta_wall_reflection(rs, level)
    terms = []
    for g, c in out.coeffs.items():
        name = "saff" if (not g.is_identity and g == saff) else _element_text(rs, g)
        terms.append(f"{name}:{c}")
    body = ",".join(terms)
    if args.format == "records":
        print(f"{body} @ base={out.base}")
    else:
        print(json.dumps({"char": body, "base": str(out.base)}))
    return 0


def _cmd_verify_lemma(args) -> int:
    rs = args.type
    level = _require_level(args, rs)
    _warn_lattice(rs, level)
    g = _parse_element(rs, level, args.element)
    verdict = translate.verify_weight_geometry(
        rs, Weight(args.lam), Weight(args.mu), g, level, args.bound)
    return _emit([[("verified", verdict)]], args.format)


def _cmd_admissible(args) -> int:
    rs = args.type
    level = _require_level(args, rs)
    _warn_lattice(rs, level)
    rows = [[("weight", w)] for w in annihilator.admissible_list(rs, level)]
    return _emit(rows, args.format)


def _cmd_generator(args) -> int:
    rs = args.type
    level = _require_level(args, rs)
    _warn_lattice(rs, level)
    g = annihilator.singular_generator_label(rs, level)
    image = affine.affine_apply(rs, g, Weight.zero(rs.rank), level)
    row = [("g", _element_text(rs, g)), ("weight", image)]
    return _emit([row], args.format)


def _cmd_transport(args) -> int:
    rs = args.type
    level = _require_level(args, rs)
    _warn_lattice(rs, level)
    gens = {_parse_element(rs, level, t)
            for t in _split_terms(args.generators) if t.strip()}
    labels = annihilator.make_labels(rs, Weight.zero(rs.rank), gens, level)
    target = Weight(args.to)
    moved = annihilator.transport(rs, labels, target)
    rows = []
    for g in sorted(moved.generators, key=lambda g: _sort_key(rs, g)):
        image = affine.affine_apply(rs, g, target, level)
        rows.append([("g", _element_text(rs, g)), ("image", image)])
    return _emit(rows, args.format)


# ---------------------------------------------------------------------------
# parser assembly

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="afftrans",
        description="Exact weight, alcove and translation combinatorics "
                    "for simple Lie algebras at rational shifted level.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("records", "json-lines"),
                        default="records", help="output mode")
    common.add_argument("--cap", type=int, default=None,
                        help="dimension guard for tensor computations")
    leveled = argparse.ArgumentParser(add_help=False)
    group = leveled.add_mutually_exclusive_group()
    group.add_argument("--level", help="shifted level p/q")
    group.add_argument("--k", help="unshifted level; converted by adding "
                                   "the dual Coxeter number")

    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, parents, help_text):
        p = sub.add_parser(name, parents=parents, help=help_text)
        p.add_argument("type", type=_type_arg, help="root system, e.g. A2")
        p.set_defaults(func=func)
        return p

    p = add("info", _cmd_info, [common, leveled], "root-system summary")

    p = add("orbit", _cmd_orbit, [common, leveled],
            "finite Weyl orbit, or dominant dot-orbit at a level")
    p.add_argument("weight", type=_weight_arg)
    p.add_argument("--bound", type=int, default=None,
                   help="height bound for orbit enumeration at a level")

    p = add("alcove", _cmd_alcove, [common, leveled],
            "alcove representative, group element and regularity")
    p.add_argument("weight", type=_weight_arg)

    add("dominant", _cmd_dominant, [common, leveled],
        "integral weights of the dominant alcove")

    p = add("tensor", _cmd_tensor, [common],
            "tensor product decomposition")
    p.add_argument("lam", type=_weight_arg)
    p.add_argument("mu", type=_weight_arg)
    p.add_argument("--oracle", action="store_true",
                   help="use the convolve-and-strip path")

    p = add("filtration", _cmd_filtration, [common],
            "Weyl (or, with --verma, Verma) filtration multiplicities")
    p.add_argument("lam", type=_weight_arg)
    p.add_argument("mu", type=_weight_arg)
    p.add_argument("--verma", action="store_true")

    p = add("datum", _cmd_datum, [common, leveled],
            "validate a translation triple")
    p.add_argument("lam_left", type=_weight_arg)
    p.add_argument("lam_right", type=_weight_arg)
    p.add_argument("lam", type=_weight_arg)

    p = add("translate-weyl", _cmd_translate_weyl, [common, leveled],
            "translate one module label between linkage classes")
    p.add_argument("--element", required=True, help="group element, "
                   "e.g. e, saff, t[5]*s1")
    p.add_argument("--from", dest="src", type=_weight_arg, required=True)
    p.add_argument("--to", dest="dst", type=_weight_arg, required=True)
    p.add_argument("--verma", action="store_true",
                   help="drop the dominance requirement on the source label")

    p = add("translate-char", _cmd_translate_char, [common, leveled],
            "translate a Weyl-basis character between linkage classes")
    p.add_argument("--from", dest="src", type=_weight_arg, required=True)
    p.add_argument("--to", dest="dst", type=_weight_arg, required=True)
    p.add_argument("--char", required=True,
                   help="comma-separated <element>:<coefficient> terms")

    p = add("verify-lemma", _cmd_verify_lemma, [common, leveled],
            "exhaustive check of the translation weight geometry")
    p.add_argument("--lam", type=_weight_arg, required=True)
    p.add_argument("--mu", type=_weight_arg, required=True)
    p.add_argument("--element", required=True)
    p.add_argument("--bound", type=int, required=True)

    add("admissible", _cmd_admissible, [common, leveled],
        "regular integral alcove weights")

    add("generator", _cmd_generator, [common, leveled],
        "label of the singular generator over weight 0")

    p = add("transport", _cmd_transport, [common, leveled],
            "re-base a submodule label set from 0 to another weight")
    p.add_argument("--to", type=_weight_arg, required=True)
    p.add_argument("--generators", default="",
                   help="comma-separated group elements (may be empty)")

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except AfftransError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
