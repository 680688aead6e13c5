"""Scenario evaluation: per-seed inference, thresholding, accuracy scoring.

For every seed word an object is instantiated, the evidence
``IsA(obj, seed) = true`` is clamped, and all four relation families of
that object are queried.  A query counts as predicted true when its
probability strictly exceeds 0.5; accuracies are reported per relation
against a hand-labeled gold standard, alongside the seed-sense
disambiguation accuracy.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import bln
from .bln import AbstractVar, GroundNetwork
from .disambiguation import SenseAssignment
from .edges import RelationType


class MissingVariableError(KeyError):
    def __init__(self, seed):
        super().__init__(f"no IsA variable for seed {seed!r} in the network")
        self.seed = seed


class GoldCoverageError(ValueError):
    def __init__(self, missing):
        keys = ", ".join(f"({s}, {r.value}, {t})" for s, r, t in sorted(
            missing, key=lambda k: (k[0], k[1].value, k[2])))
        super().__init__(f"gold triples missing from results: {keys}")
        self.missing = missing


@dataclass
class GoldStandard:
    """Hand labels: boolean relation triples plus the correct seed senses."""

    relation_labels: dict[tuple[str, RelationType, str], bool]
    sense_labels: dict[str, str]


@dataclass
class AccuracyReport:
    per_relation: dict[RelationType, float]  # percentages, unrounded
    wsd_accuracy: float | None
    counts: dict[RelationType, tuple[int, int]]  # correct, total


def object_name(position: int) -> str:
    """Naming convention tying seed list positions to ground objects."""
    return f"obj{position + 1}"


def run_scenario(net: GroundNetwork, seeds, method: str = "lw", n_samples: int = 20_000,
                 burn_in: int = 1000, seed: int = 0,
                 n_chains: int = 512) -> dict[tuple[str, RelationType, str], float]:
    """Query all relation variables of each seed's object.

    The network must contain one object per seed, named by
    :func:`object_name` in seed order.  Per-object subnetworks are
    disjoint, so each seed's queries run on its own component.  Returns
    (seed, relation, target entity) -> probability.
    """
    results: dict[tuple[str, RelationType, str], float] = {}
    components = net.components()
    for position, seed_word in enumerate(seeds):
        obj = object_name(position)
        ev_name = f"IsA({obj},{seed_word})"
        if ev_name not in net.index:
            raise MissingVariableError(seed_word)
        component = next(c for c in components if net.index[ev_name] in c)
        sub = net.subnetwork(component)
        queries = [name for name in sub.names if name not in set(sub.aux)]
        evidence = {ev_name: True}

        if method == "exact":
            estimates = {q: bln.infer_exact(sub, q, evidence) for q in queries}
        elif method == "lw":
            estimates = bln.lw_estimates(sub, queries, evidence,
                                         n_samples=n_samples, seed=seed + position)
        elif method == "gibbs":
            estimates = bln.gibbs_estimates(sub, queries, evidence, burn_in=burn_in,
                                            n_samples=n_samples, seed=seed + position,
                                            n_chains=n_chains)
        else:
            raise ValueError(f"unknown inference method {method!r}")

        for name, prob in estimates.items():
            var = AbstractVar.parse(name)
            results[(seed_word, RelationType(var.predicate), var.args[1])] = prob
    return results


def score(results, gold: GoldStandard, assignment: SenseAssignment | None = None) -> AccuracyReport:
    """Threshold results at 0.5 (strictly) and compare against gold labels.

    Every gold triple must be present in the results.  When a sense
    assignment is supplied and the gold carries sense labels, the WSD
    accuracy is the fraction of seeds assigned their labeled sense.
    """
    missing = set(gold.relation_labels) - set(results)
    if missing:
        raise GoldCoverageError(missing)

    counts: dict[RelationType, list[int]] = {}
    for key, label in gold.relation_labels.items():
        prediction = results[key] > 0.5
        cell = counts.setdefault(key[1], [0, 0])
        cell[0] += int(prediction == label)
        cell[1] += 1

    per_relation = {rel: 100.0 * correct / total for rel, (correct, total) in counts.items()}

    wsd = None
    if assignment is not None and gold.sense_labels:
        hits = sum(1 for word, sid in gold.sense_labels.items()
                   if assignment.sense_of(word) == sid)
        wsd = 100.0 * hits / len(gold.sense_labels)

    return AccuracyReport(
        per_relation=per_relation, wsd_accuracy=wsd,
        counts={rel: (c, t) for rel, (c, t) in counts.items()})


# ---------------------------------------------------------------------------
# Gold file and report formats
# ---------------------------------------------------------------------------


def load_gold(path) -> GoldStandard:
    """Read ``REL seed relation target 0|1`` and ``SENSE seed synset`` lines."""
    relation_labels: dict[tuple[str, RelationType, str], bool] = {}
    sense_labels: dict[str, str] = {}
    with open(path, encoding="utf-8") as handle:
        for line_no, raw in enumerate(handle, start=1):
            line = raw.rstrip("\n")
            if not line.strip() or line.startswith("#"):
                continue
            cols = line.split("\t")
            if cols[0] == "REL" and len(cols) == 5:
                _, seed, rel, target, label = cols
                relation_labels[(seed, RelationType(rel), target)] = label == "1"
            elif cols[0] == "SENSE" and len(cols) == 3:
                sense_labels[cols[1]] = cols[2]
            else:
                raise ValueError(f"bad gold record on line {line_no}: {raw!r}")
    return GoldStandard(relation_labels=relation_labels, sense_labels=sense_labels)


RELATION_COLUMNS = (RelationType.IsA, RelationType.AtLocation,
                    RelationType.HasProperty, RelationType.UsedFor)


def format_report(reports: dict[str, AccuracyReport]) -> str:
    """Aligned table, one scenario per row, the four relations as columns."""
    header = ["Scenario"] + [r.value for r in RELATION_COLUMNS] + ["WSD"]
    rows = [header]
    for name, report in reports.items():
        row = [name]
        for rel in RELATION_COLUMNS:
            value = report.per_relation.get(rel)
            row.append("-" if value is None else f"{value:.1f}")
        row.append("-" if report.wsd_accuracy is None else f"{report.wsd_accuracy:.1f}")
        rows.append(row)
    widths = [max(len(r[i]) for r in rows) for i in range(len(header))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip()
             for row in rows]
    return "\n".join(lines) + "\n"


def machine_report(reports: dict[str, AccuracyReport]) -> str:
    """One ``scenario<TAB>relation<TAB>accuracy`` line per reported cell."""
    lines = []
    for name, report in reports.items():
        for rel in RELATION_COLUMNS:
            if rel in report.per_relation:
                lines.append(f"{name}\t{rel.value}\t{report.per_relation[rel]:.1f}")
        if report.wsd_accuracy is not None:
            lines.append(f"{name}\tWSD\t{report.wsd_accuracy:.1f}")
    return "\n".join(lines) + "\n"
