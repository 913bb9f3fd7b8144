"""Stable, deterministic serialization of reports (JSON documents, text, TSV)."""
from __future__ import annotations

import json

from fermat_adjoint import __version__
from fermat_adjoint.baselocus import BaseLocusReport, Theorem2BaseReport
from fermat_adjoint.jets import SeparationReport
from fermat_adjoint.lemmas import ConventionResolution
from fermat_adjoint.search import SearchResult, TupleVerification

TOOL = "fermat-adjoint"


def header(command: str, inputs: dict, sign: int, resolution: ConventionResolution | None) -> dict:
    doc = {
        "tool": TOOL,
        "tool_version": __version__,
        "command": command,
        "input": inputs,
        "sign_convention": sign,
    }
    if resolution is not None:
        doc["sign_resolution"] = resolution_doc(resolution)
    else:
        doc["sign_resolution"] = {"source": "flag"}
    return doc


def resolution_doc(res: ConventionResolution) -> dict:
    return {
        "source": "auto",
        "probe": [res.n, res.p],
        "samples": len(res.evidence),
        "informative_samples": res.informative_rows,
        "twist_survivors": sorted(k for k, ok in res.twist_survivors.items() if ok),
    }


def base_locus_doc(report: BaseLocusReport) -> dict:
    return {
        "system": report.system.as_dict(),
        "base_supports": [list(t) for t in report.base_supports],
        "pair_base_points": [list(t) for t in report.pair_base_points],
        "predicted_pairs": [list(t) for t in report.predicted_pairs],
        "exact_match": report.exact_match,
    }


def separation_doc(rep: SeparationReport) -> dict:
    doc = {
        "pair": list(rep.point.pair),
        "rank": rep.rank,
        "full_rank": rep.full_rank,
        "deficiency": rep.deficiency,
        "zero_columns": list(rep.zero_columns),
        "value_nonzero": rep.value_nonzero,
        "predicted_direction": rep.predicted_direction,
        "direction_degenerate": rep.direction_degenerate,
    }
    if rep.claimed_direction is not None:
        doc["claimed_direction"] = rep.claimed_direction
        doc["claimed_direction_unseparated"] = rep.claimed_direction_unseparated
    return doc


def theorem2_doc(base: Theorem2BaseReport, seps) -> dict:
    doc = base_locus_doc(base.report)
    doc["complement"] = list(base.complement)
    doc["complement_size"] = base.complement_size
    doc["congruences"] = [
        {"name": v.name, "target": v.target, "pairs": [list(t) for t in v.pairs],
         "exact": v.exact, "sound": v.sound}
        for v in base.variants
    ]
    doc["condition_satisfied"] = base.condition_satisfied
    doc["congruences_agree"] = base.variants_agree
    doc["separation"] = [separation_doc(r) for r in seps]
    return doc


def tuple_doc(tv: TupleVerification) -> dict:
    doc = {"weights": list(tv.config.weights)}
    doc.update(theorem2_doc(tv.base, tv.separation))
    doc["unseparated_pairs_anywhere"] = [list(t) for t in tv.unseparated_elsewhere]
    doc["base_point_found"] = tv.base_point_found
    doc["tangent_failure_at_base_point"] = tv.tangent_failure_at_base_point
    doc["verified"] = tv.verified
    return doc


def search_doc(result: SearchResult) -> dict:
    return {
        "n": result.n,
        "p": result.p,
        "fundamental": result.fundamental,
        "scanned": result.scanned,
        "tuples": [tuple_doc(t) for t in result.tuples],
        "all_verified": result.all_verified,
    }


def search_tsv(result: SearchResult) -> str:
    cols = ["n", "p", "weights", "base_pairs", "zero_columns_at_base", "unseparated_anywhere", "verified"]
    lines = ["\t".join(cols)]
    for t in result.tuples:
        zeros = ";".join(f"{a},{b}:{','.join(map(str, r.zero_columns)) or '-'}"
                         for r in t.separation for a, b in [r.point.pair])
        lines.append("\t".join([
            str(result.n), str(result.p),
            ",".join(map(str, t.config.weights)),
            ";".join(f"{a},{b}" for a, b in t.base.report.pair_base_points) or "-",
            zeros or "-",
            ";".join(f"{a},{b}" for a, b in t.unseparated_elsewhere) or "-",
            "yes" if t.verified else "no",
        ]))
    return "\n".join(lines) + "\n"


def to_json(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))


def _fmt_scalar(v) -> str:
    if isinstance(v, bool):
        return "yes" if v else "no"
    if v is None:
        return "-"
    if isinstance(v, list) and all(not isinstance(x, (dict, list)) for x in v):
        return "(" + ", ".join(map(str, v)) + ")"
    if isinstance(v, list) and all(isinstance(x, list) and all(not isinstance(y, (dict, list)) for y in x) for x in v):
        return "{" + ", ".join("(" + ", ".join(map(str, x)) + ")" for x in v) + "}" if v else "{}"
    return str(v)


def render_text(doc: dict, indent: int = 0) -> str:
    """Indented ``key: value`` listing; nested records become sub-blocks."""
    pad = "  " * indent
    out = []
    for key, val in doc.items():
        if isinstance(val, dict):
            out.append(f"{pad}{key}:")
            out.append(render_text(val, indent + 1))
        elif isinstance(val, list) and val and all(isinstance(x, dict) for x in val):
            out.append(f"{pad}{key}: [{len(val)}]")
            for item in val:
                out.append(f"{pad}  -")
                out.append(render_text(item, indent + 2))
        else:
            out.append(f"{pad}{key}: {_fmt_scalar(val)}")
    return "\n".join(line for line in out if line)
