"""Structured (JSON) and text rendering of exact results.

The machine format keys graded components by degree; every term is
``{"monomial": {<var>: exp, ...}, "coeff": {<zeta-monomial>: [num, den]}}``
so exactness survives serialization; parsing helpers reverse it exactly.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Optional

from .chernweil import CharClassExpr
from .cpn import CPnClass
from .sympoly import GradedPoly
from .zetapoly import ZetaPoly, format_zeta_key, parse_zeta_key, zp_eval


def zeta_poly_to_json(p: ZetaPoly) -> Dict[str, list]:
    return {format_zeta_key(key): [coeff.numerator, coeff.denominator]
            for key, coeff in sorted(p.items())}


def zeta_poly_from_json(data: Dict[str, list]) -> ZetaPoly:
    return ZetaPoly({parse_zeta_key(key): Fraction(num, den)
                     for key, (num, den) in data.items()})


def _monomial_to_json(exps, varname):
    return {f"{varname}{i}": e for i, e in enumerate(exps, start=1) if e}


def _monomial_from_json(data, varname, rank):
    exps = [0] * rank
    for key, e in data.items():
        if not key.startswith(varname):
            raise ValueError(f"unexpected variable {key!r}")
        exps[int(key[len(varname):]) - 1] = int(e)
    return tuple(exps)


def _term_json(exps, coeff, varname, digits: Optional[int]):
    term = {"monomial": _monomial_to_json(exps, varname),
            "coeff": zeta_poly_to_json(coeff)}
    if digits is not None:
        term["coeff_numeric"] = str(zp_eval(coeff, digits))
    return term


def graded_poly_to_json(p: GradedPoly, digits: Optional[int] = None) -> dict:
    components: Dict[str, list] = {}
    for d in p.degrees():
        terms = [(e, c) for e, c in p.items() if sum(e) == d]
        components[str(d)] = [_term_json(e, c, "v", digits)
                              for e, c in sorted(terms, reverse=True)]
    return {"kind": "graded_poly", "rank": p.rank, "max_degree": p.max_degree,
            "components": components}


def graded_poly_from_json(data: dict) -> GradedPoly:
    rank = int(data["rank"])
    terms = {}
    for terms_list in data["components"].values():
        for term in terms_list:
            exps = _monomial_from_json(term["monomial"], "v", rank)
            terms[exps] = zeta_poly_from_json(term["coeff"])
    return GradedPoly(rank, int(data["max_degree"]), terms)


def char_class_to_json(expr: CharClassExpr, digits: Optional[int] = None) -> dict:
    components: Dict[str, list] = {}
    for d in expr.cohomological_degrees():
        comp = expr.component(d)
        components[str(d)] = [_term_json(e, c, "c", digits)
                              for e, c in sorted(comp.items(), reverse=True)]
    out = {"kind": "char_class", "rank": expr.rank, "components": components}
    ch = expr.ch_presentation()
    if ch is not None:
        out["ch"] = {str(d): zeta_poly_to_json(c) for d, c in sorted(ch.items())}
    return out


def char_class_from_json(data: dict) -> CharClassExpr:
    rank = int(data["rank"])
    terms = {}
    for terms_list in data["components"].values():
        for term in terms_list:
            exps = _monomial_from_json(term["monomial"], "c", rank)
            terms[exps] = zeta_poly_from_json(term["coeff"])
    return CharClassExpr(rank, terms)


def cpn_class_to_json(cls: CPnClass, digits: Optional[int] = None) -> dict:
    components = {}
    for p, coeff in cls.items():
        term = {"monomial": ({"H": p} if p else {}),
                "coeff": zeta_poly_to_json(coeff)}
        if digits is not None:
            term["coeff_numeric"] = str(zp_eval(coeff, digits))
        components[str(2 * p)] = [term]
    return {"kind": "cpn_class", "n": cls.n, "components": components}


def cpn_class_from_json(data: dict) -> CPnClass:
    coeffs = {}
    for terms_list in data["components"].values():
        for term in terms_list:
            p = int(term["monomial"].get("H", 0))
            coeffs[p] = zeta_poly_from_json(term["coeff"])
    return CPnClass(int(data["n"]), coeffs)


# -- text rendering ----------------------------------------------------------

def _coeff_text(coeff: ZetaPoly, digits: Optional[int]) -> str:
    if digits is not None:
        return str(zp_eval(coeff, digits))
    if len(coeff) == 1:
        ((key, c),) = list(coeff.items())
        from .zetapoly import format_zeta_key

        mono = format_zeta_key(key)
        return str(c) if mono == "1" else f"{c} * {mono}"
    text = str(coeff)
    return f"({text})" if len(coeff) > 1 else text


def _mono_text(exps, varname) -> str:
    parts = []
    for i, e in enumerate(exps, start=1):
        if e == 1:
            parts.append(f"{varname}{i}")
        elif e:
            parts.append(f"{varname}{i}^{e}")
    return "*".join(parts)


def _join_terms(rendered) -> str:
    out = ""
    for term in rendered:
        if not out:
            out = term
        elif term.startswith("-"):
            out += f" - {term[1:]}"
        else:
            out += f" + {term}"
    return out


def render_graded_poly(p: GradedPoly, digits: Optional[int] = None,
                       label: str = "T") -> str:
    lines = []
    for d in p.degrees():
        terms = sorted(((e, c) for e, c in p.items() if sum(e) == d),
                       reverse=True)
        rendered = _join_terms(
            " * ".join(x for x in (_coeff_text(c, digits), _mono_text(e, "v")) if x)
            for e, c in terms)
        lines.append(f"{label}[{d}] = {rendered}")
    return "\n".join(lines) if lines else f"{label} = 0"


def render_char_class(expr: CharClassExpr, digits: Optional[int] = None,
                      label: str = "T") -> str:
    lines = []
    for d in expr.cohomological_degrees():
        comp = expr.component(d)
        rendered = _join_terms(
            " * ".join(x for x in (_coeff_text(c, digits), _mono_text(e, "c")) if x)
            for e, c in sorted(comp.items(), reverse=True))
        lines.append(f"{label}[{d}] = {rendered}")
    return "\n".join(lines) if lines else f"{label} = 0"


def render_cpn_class(cls: CPnClass, digits: Optional[int] = None,
                     label: str = "T") -> str:
    lines = []
    for p, coeff in cls.items():
        mono = "" if p == 0 else ("H" if p == 1 else f"H^{p}")
        rendered = " * ".join(x for x in (_coeff_text(coeff, digits), mono) if x)
        lines.append(f"{label}[{2 * p}] = {rendered}")
    return "\n".join(lines) if lines else f"{label} = 0"
