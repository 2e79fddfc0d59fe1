"""End-to-end analysis of a monomial algebra and its reports."""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations

from .classify import ClassificationReport, criteria, l0_basis, saturation_order, summary_line
from .cohomology import GradedH1
from .errors import DimensionMismatch
from .lie import LieAlgebra, series_and_center
from .linalg import Field
from .oracle import ORACLE_CAP, build_algebra, cross_check
from .parser import InputDocument
from .quiver import DEFAULT_CAP, Quiver, enumerate_basis, split_components

SCHEMA_VERSION = 1

VERDICT_ORDER = ("zero", "l_minus1_zero", "loop_case", "solvable", "nilpotent", "abelian",
                 "reductive", "semisimple", "simple")


@dataclass
class ComponentResult:
    quiver: Quiver
    relations: tuple
    basis: object
    h1: GradedH1
    lie: LieAlgebra
    classification: ClassificationReport


def analyze_component(q: Quiver, z, field: Field, cap: int = DEFAULT_CAP) -> ComponentResult:
    basis = enumerate_basis(q, z, cap)
    h1 = GradedH1(basis, field)
    L = h1.structure_constants()
    sat = saturation_order(basis)
    if h1.piece_dim(-1) == 0:
        l0_basis(h1, sat)
    return ComponentResult(q, tuple(z), basis, h1, L, criteria(basis, h1, L, sat))


def _all(values: list):
    return None if any(v is None for v in values) else all(values)


def aggregate(components: list, dims: list) -> dict:
    """Verdicts for the direct sum of the component algebras."""
    out = {}
    for key in ("solvable", "nilpotent", "abelian", "reductive"):
        vals = [c.verdicts[key]["value"] for c in components]
        brute = [c.verdicts[key]["brute_force"] for c in components]
        v, b = _all(vals), _all(brute)
        out[key] = {"value": v, "brute_force": b,
                    "agree": None if v is None or b is None else v == b,
                    "status": "applicable" if v is not None else "inapplicable"}
    total = sum(dims)
    for key in ("semisimple", "simple"):
        live = [c for c, d in zip(components, dims) if d]
        vals = [c.verdicts["semisimple"]["value"] for c in live]
        brute = [c.verdicts["semisimple"]["brute_force"] for c in live]
        if key == "simple":
            if len(live) == 1:
                vals = [live[0].verdicts["simple"]["value"]]
                brute = [live[0].verdicts["simple"]["brute_force"]]
            else:
                vals, brute = [False], [False]
        v, b = _all(vals), _all(brute)
        if total == 0:
            v = b = False
        out[key] = {"value": v, "brute_force": b,
                    "agree": None if v is None or b is None else v == b,
                    "status": "applicable" if v is not None else "inapplicable"}
    models = [c.verdicts.get("model", {}).get("value") for c, d in zip(components, dims) if d]
    model = " x ".join(m for m in models if m) if all(models) and models else None
    out["model"] = {"value": model, "status": "applicable" if model else "inapplicable"}
    out["zero"] = {"value": total == 0, "status": "applicable"}
    return out


class AnalysisReport:
    """JSON-native report; equality and round-tripping go through ``data``."""

    def __init__(self, data: dict):
        self.data = json.loads(json.dumps(data, sort_keys=True))

    def __eq__(self, other):
        return isinstance(other, AnalysisReport) and self.data == other.data

    def __getitem__(self, key):
        return self.data[key]

    def to_dict(self) -> dict:
        return json.loads(json.dumps(self.data))

    def to_json(self) -> str:
        return json.dumps(self.data, sort_keys=True, indent=2, ensure_ascii=False) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "AnalysisReport":
        return cls(json.loads(text))

    def render(self, fmt: str = "text") -> bytes:
        if fmt == "json":
            return self.to_json().encode("utf-8")
        return render_text(self.data).encode("utf-8")


def _coeffs(field: Field, v: dict) -> dict:
    return {str(k): field.format(c) for k, c in sorted(v.items())}


def _h1_block(h1: GradedH1, L: LieAlgebra) -> dict:
    f = h1.field
    return {
        "dim": h1.dim,
        "dims_by_degree": {str(d): n for d, n in h1.dims_by_degree().items()},
        "basis": [{"index": i, "degree": d, "representative": lab}
                  for i, (d, lab) in enumerate(zip(h1.rep_degrees, L.labels))],
        "brackets": [{"i": i, "j": j, "value": _coeffs(f, L.basis_bracket(i, j))}
                     for i, j in combinations(range(L.dim), 2) if L.basis_bracket(i, j)],
    }


def analyze(doc: InputDocument, oracle: bool = False, cap: int = DEFAULT_CAP,
            oracle_cap: int = ORACLE_CAP) -> AnalysisReport:
    q, z, f = doc.quiver, doc.relations, doc.field
    basis = enumerate_basis(q, z, cap)
    h1 = GradedH1(basis, f)
    L = h1.structure_constants()
    comps, comp_data, dims = [], [], []
    for sub, rels, vids, aids in split_components(q, z):
        res = analyze_component(sub, rels, f, cap)
        comps.append(res.classification)
        dims.append(res.h1.dim)
        block = _h1_block(res.h1, res.lie)
        block.update({
            "vertices": list(sub.vertices),
            "arrows": [a.name for a in sub.arrows],
            "summary": res.classification.summary(),
            "classification": res.classification.to_dict(),
        })
        comp_data.append(block)
    if sum(dims) != h1.dim:
        raise DimensionMismatch("component dimensions do not add up to dim H1")
    verdicts = aggregate(comps, dims)
    ser = series_and_center(L)
    data = {
        "schema_version": SCHEMA_VERSION,
        "field": f.name,
        "quiver": {
            "vertices": list(q.vertices),
            "arrows": [[a.name, q.vertices[a.source], q.vertices[a.target]] for a in q.arrows],
            "relations": doc.relation_words(),
        },
        "basis_size": len(basis),
        "basis_sizes_by_length": list(basis.sizes()),
        "h1": _h1_block(h1, L),
        "series": {"derived": ser.derived_dims(), "lower_central": ser.lower_central_dims(),
                   "center": ser.center.dim},
        "verdict": summary_line(verdicts, h1.dim),
        "classification": verdicts,
        "components": comp_data,
        "oracle": None,
    }
    if oracle:
        data["oracle"] = cross_check(h1, L, build_algebra(basis, f, oracle_cap)).to_dict()
    return AnalysisReport(data)


# -- text rendering -------------------------------------------------------------------------------


def _yn(v) -> str:
    return {True: "yes", False: "no", None: "n/a"}[v]


def _verdict_line(name: str, v: dict) -> str:
    if not isinstance(v, dict) or "value" not in v:
        return f"  {name}: {v}"
    if name in ("model", "semisimple_quotient_model"):
        val = v["value"]
        if isinstance(val, list):
            val = " x ".join(val) or "0"
        return f"  {name}: {val if val is not None else 'inapplicable'}"
    head = _yn(v["value"]) if v.get("status") != "inapplicable" else "inapplicable"
    tail = ""
    if "brute_force" in v and v["brute_force"] is not None:
        tail = f" (brute force: {_yn(v['brute_force'])}"
        if v.get("agree") is not None:
            tail += ", agree" if v["agree"] else ", DISAGREE"
        tail += ")"
    return f"  {name}: {head}{tail}"


def _terms(coeffs: dict) -> str:
    out = ""
    for k, c in coeffs.items():
        neg, c = c.startswith("-"), c.lstrip("-")
        body = f"x{k}" if c == "1" else f"{c}*x{k}"
        if not out:
            out = ("-" if neg else "") + body
        else:
            out += (" - " if neg else " + ") + body
    return out


def _h1_lines(block: dict, indent: str = "") -> list:
    lines = []
    if block["dim"] == 0:
        lines.append(f"{indent}H1 = 0")
        lines.append(f"{indent}basis: (none)")
        lines.append(f"{indent}brackets: (none)")
        return lines
    lines.append(f"{indent}dim H1 = {block['dim']}")
    degs = ", ".join(f"L_{d} = {n}" for d, n in block["dims_by_degree"].items())
    lines.append(f"{indent}{degs}")
    lines.append(f"{indent}basis:")
    for b in block["basis"]:
        lines.append(f"{indent}  x{b['index']} [deg {b['degree']}] = {b['representative']}")
    if block["brackets"]:
        lines.append(f"{indent}brackets:")
        for br in block["brackets"]:
            lines.append(f"{indent}  [x{br['i']}, x{br['j']}] = {_terms(br['value'])}")
    else:
        lines.append(f"{indent}brackets: (all zero)")
    return lines


def render_text(data: dict) -> str:
    q = data["quiver"]
    lines = [f"field: {data['field']}",
             f"quiver: {len(q['vertices'])} vertices, {len(q['arrows'])} arrows, "
             f"{len(q['relations'])} relations",
             f"|B| = {data['basis_size']} (by length: "
             + " ".join(map(str, data["basis_sizes_by_length"])) + ")"]
    lines += _h1_lines(data["h1"])
    lines.append(f"verdict: {data['verdict']}")
    lines.append("criteria:")
    for name in VERDICT_ORDER:
        if name in data["classification"]:
            lines.append(_verdict_line(name, data["classification"][name]))
    lines.append(_verdict_line("model", data["classification"]["model"]))
    if len(data["components"]) > 1:
        lines.append(f"components: {len(data['components'])}")
    for k, c in enumerate(data["components"]):
        lines.append(f"component {k}: vertices {' '.join(c['vertices'])}; "
                     f"arrows {' '.join(c['arrows']) or '(none)'}")
        lines.append(f"  verdict: {c['summary']}")
        if len(data["components"]) > 1:
            lines += _h1_lines(c, "  ")
        for name in VERDICT_ORDER:
            v = c["classification"]["verdicts"].get(name)
            if v is not None:
                lines.append("  " + _verdict_line(name, v))
        sq = c["classification"]["verdicts"].get("semisimple_quotient_model", {})
        if sq.get("value") is not None:
            lines.append(f"    semisimple quotient: {' x '.join(sq['value']) or '0'}")
    o = data.get("oracle")
    if o is not None:
        lines.append(f"oracle: {'passed' if o['passed'] else 'FAILED'} "
                     f"(dim {o['dim_minimal']} = {o['dim_direct']}; Der {o['der_dim']}, "
                     f"Ad {o['ad_dim']}, Der_E {o['der_e_dim']} = Ker psi1 {o['ker_psi1_dim']})")
    return "\n".join(lines) + "\n"


def criteria_text(report: AnalysisReport) -> str:
    data = report.data
    lines = [f"verdict: {data['verdict']}", "criteria:"]
    for name in VERDICT_ORDER:
        if name in data["classification"]:
            lines.append(_verdict_line(name, data["classification"][name]))
    for k, c in enumerate(data["components"]):
        lines.append(f"component {k}: {c['summary']}")
        vs = c["classification"]["verdicts"]
        for name in [n for n in VERDICT_ORDER if n in vs] + ["model", "semisimple_quotient_model"]:
            v = vs[name]
            crit = v.get("criterion")
            lines.append("  " + _verdict_line(name, v) + (f"  [{crit}]" if crit else ""))
        for note in c["classification"]["notes"]:
            lines.append(f"  note: {note}")
    return "\n".join(lines) + "\n"


def bracket_text(report: AnalysisReport) -> str:
    return "\n".join(_h1_lines(report.data["h1"])) + "\n"
