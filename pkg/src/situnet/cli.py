"""Batch command-line driver: ``generate``, ``infer``, ``evaluate``.

Configuration is a flat ``key=value`` text file; any key can be
overridden by the matching command-line flag (flags win).  Paths in a
config file resolve relative to the file's own directory, so the bundled
scenario configs work from any working directory.

One master seed drives every randomized stage through fixed offsets:
evidence simulation uses ``seed + 1``, ad-hoc inference ``seed + 2``,
and scenario evaluation ``seed + 100 + i`` for the i-th seed word.
Rerunning a command with the same config and seed reproduces its outputs
byte for byte.
"""

from __future__ import annotations

import argparse
import difflib
import sys
from dataclasses import dataclass, fields
from pathlib import Path

from . import bln, evaluation, netgen
from .disambiguation import disambiguate_seeds, save_assignment
from .edges import filter_multiword, load_edges
from .lexicon import load_frequencies, load_lexicon, load_stopwords
from .relatedness import EsaRelatedness, build_esa_index, load_documents

EVIDENCE_SEED_OFFSET = 1
INFER_SEED_OFFSET = 2
SCENARIO_SEED_OFFSET = 100


class ConfigError(ValueError):
    pass


class StageError(RuntimeError):
    def __init__(self, stage, error):
        super().__init__(f"stage {stage!r} failed: {error}")
        self.stage = stage


@dataclass
class PipelineConfig:
    """All inputs and tunables of one generation/evaluation run."""

    lexicon: str = ""
    edges: str = ""
    corpus: str = ""
    stopwords: str = ""
    esa_corpus: str = ""
    seeds: str = ""
    gold: str = ""
    blocklist: str = ""
    environment: str = ""
    language: str = "en"
    min_children: int = 2
    ic_threshold: float = 5.0
    alpha: float = 0.5
    root_prior: float = 0.15
    pseudocount: float = 1.0
    n_worlds: int = 20000
    min_doc_freq: int = 1
    esa_weighting: str = "raw_count"
    method: str = "lw"
    samples: int = 20000
    burn_in: int = 1000
    seed: int = 7
    scenarios: str = ""

    def validate(self):
        if not 0.0 <= self.alpha <= 1.0:
            raise ConfigError(f"alpha must be in [0, 1], got {self.alpha}")
        if not 0.0 <= self.root_prior <= 1.0:
            raise ConfigError(f"root_prior must be in [0, 1], got {self.root_prior}")
        if self.min_children < 1:
            raise ConfigError("min_children must be >= 1")
        if self.pseudocount < 0:
            raise ConfigError("pseudocount must be >= 0")
        if self.n_worlds < 1 or self.samples < 1:
            raise ConfigError("n_worlds and samples must be >= 1")
        if self.burn_in < 0:
            raise ConfigError("burn_in must be >= 0")
        if self.method not in ("exact", "lw", "gibbs"):
            raise ConfigError(f"method must be exact, lw, or gibbs, got {self.method!r}")
        if self.esa_weighting not in ("raw_count", "tfidf"):
            raise ConfigError(f"bad esa_weighting {self.esa_weighting!r}")
        return self


_INT_KEYS = {"min_children", "n_worlds", "min_doc_freq", "samples", "burn_in", "seed"}
_FLOAT_KEYS = {"ic_threshold", "alpha", "root_prior", "pseudocount"}
_KNOWN_KEYS = {f.name for f in fields(PipelineConfig)}


def load_config(path) -> tuple[PipelineConfig, dict[str, str]]:
    """Parse a key=value config file; returns the config plus raw entries.

    Raw entries keep scenario-scoped keys (``recipe.seeds=...``) that the
    flat dataclass does not model.
    """
    config = PipelineConfig()
    raw: dict[str, str] = {}
    base = Path(path).parent
    with open(path, encoding="utf-8") as handle:
        for line_no, line in enumerate(handle, start=1):
            text = line.strip()
            if not text or text.startswith("#"):
                continue
            if "=" not in text:
                raise ConfigError(f"{path}:{line_no}: expected key=value, got {text!r}")
            key, _, value = text.partition("=")
            key, value = key.strip(), value.strip()
            raw[key] = value
            if key not in _KNOWN_KEYS:
                if "." in key or key == "scenarios":
                    continue
                raise ConfigError(f"{path}:{line_no}: unknown key {key!r}")
            setattr(config, key, _convert(key, value))
    _resolve_paths(config, base)
    for key in list(raw):
        if "." in key and raw[key] and not raw[key].startswith("/"):
            candidate = base / raw[key]
            if key.endswith((".seeds", ".gold", ".blocklist")):
                raw[key] = str(candidate)
    return config, raw


def _convert(key, value):
    if key in _INT_KEYS:
        return int(value)
    if key in _FLOAT_KEYS:
        return float(value)
    return value


_PATH_KEYS = ("lexicon", "edges", "corpus", "stopwords", "esa_corpus",
              "seeds", "gold", "blocklist")


def _resolve_paths(config, base):
    for key in _PATH_KEYS:
        value = getattr(config, key)
        if value and not Path(value).is_absolute():
            setattr(config, key, str(base / value))


def apply_overrides(config: PipelineConfig, args) -> PipelineConfig:
    for key in _KNOWN_KEYS:
        value = getattr(args, key, None)
        if value is not None:
            setattr(config, key, _convert(key, str(value)) if key in _INT_KEYS | _FLOAT_KEYS else value)
    return config


def load_seed_words(path) -> list[str]:
    words = []
    with open(path, encoding="utf-8") as handle:
        for line in handle:
            word = line.split("#", 1)[0].strip()
            if word:
                words.append(word)
    return words


# ---------------------------------------------------------------------------
# Pipeline assembly
# ---------------------------------------------------------------------------


def _stage(name, func, *args, **kwargs):
    try:
        return func(*args, **kwargs)
    except StageError:
        raise
    except Exception as error:
        raise StageError(name, error) from error


@dataclass
class PipelineProducts:
    assignment: object
    graph: object
    declaration: object
    fragments: list
    dropped_edges: int


def run_generation(config: PipelineConfig) -> PipelineProducts:
    """The full generation pipeline, in memory."""
    config.validate()
    lexicon = _stage("lexicon", load_lexicon, config.lexicon)
    freq = _stage("corpus", load_frequencies, Path(config.corpus))
    stopwords = _stage("stopwords", load_stopwords, Path(config.stopwords))
    store = _stage("edges", lambda: filter_multiword(
        load_edges(config.edges, config.language), lexicon))
    documents = _stage("esa", load_documents, config.esa_corpus)
    index = _stage("esa", build_esa_index, documents, config.esa_weighting,
                   stopwords, config.min_doc_freq)
    provider = EsaRelatedness(index)

    seeds = _stage("seeds", load_seed_words, config.seeds)
    if not seeds:
        raise ConfigError(f"seeds file {config.seeds} is empty")

    blocklist = netgen.DEFAULT_BLOCKLIST
    if config.blocklist:
        blocklist = frozenset(load_stopwords(Path(config.blocklist)))

    assignment = _stage("disambiguation", disambiguate_seeds, seeds, lexicon)
    graph = _stage("isa", netgen.add_isa_paths, assignment, lexicon)
    graph = _stage("compress", netgen.compress, graph, freq, config.min_children,
                   config.ic_threshold, blocklist)
    graph = _stage("relations", netgen.attach_relations, graph, store, lexicon,
                   provider, assignment, stopwords)
    dropped = getattr(graph, "dropped_edges", 0)
    graph = _stage("locations", netgen.attach_locations_two_hop, graph, store,
                   config.environment)
    _stage("validate", netgen.validate_graph, graph)
    declaration, fragments = _stage("model", bln.model_from_graph, graph)
    evidence = _stage("evidence", bln.simulate_evidence, graph, provider,
                      config.alpha, config.n_worlds, config.seed + EVIDENCE_SEED_OFFSET,
                      config.root_prior)
    fragments = _stage("learning", bln.learn_cpfs, fragments, evidence,
                       config.pseudocount)
    return PipelineProducts(assignment=assignment, graph=graph,
                            declaration=declaration, fragments=fragments,
                            dropped_edges=dropped)


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------


def cmd_generate(args) -> int:
    config, _ = load_config(args.config)
    apply_overrides(config, args)
    products = run_generation(config)

    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    netgen.save_graph(products.graph, out_dir / "graph.tsv")
    bln.write_model(products.declaration, products.fragments, out_dir / "model.tsv")
    save_assignment(products.assignment, out_dir / "assignment.tsv")

    graph = products.graph
    print(f"nodes: {len(graph.nodes)}")
    print(f"edges: {len(graph.edges)}")
    print(f"fragments: {len(products.fragments)}")
    print(f"relations dropped by sense gate: {products.dropped_edges}")
    print(f"wrote graph.tsv, model.tsv, assignment.tsv to {out_dir}")
    return 0


def cmd_infer(args) -> int:
    config, _ = load_config(args.config) if args.config else (PipelineConfig(), {})
    apply_overrides(config, args)
    config.validate()
    declaration, fragments = bln.read_model(args.model)

    evidence_items = []
    for chunk in args.evidence or []:
        for part in chunk.split(";"):
            part = part.strip()
            if part:
                evidence_items.append(part)
    evidence, objects = _parse_evidence(evidence_items)
    query_objects = [_object_of(q) for q in args.query]
    for obj in query_objects:
        if obj and obj not in objects:
            objects.append(obj)
    if not objects:
        raise ConfigError("no objects named in evidence or queries")

    net = bln.ground(declaration, fragments, objects)
    for name in evidence:
        if name not in net.index:
            raise ConfigError(_unknown_variable(name, net))

    queries = []
    for pattern in args.query:
        queries.extend(_expand_query(pattern, net))

    seed = config.seed + INFER_SEED_OFFSET
    results = {}
    for query in queries:
        if config.method == "exact":
            results[query] = bln.infer_exact(net, query, evidence)
        elif config.method == "lw":
            results[query] = bln.infer_lw(net, query, evidence,
                                          n_samples=config.samples, seed=seed)
        else:
            results[query] = bln.infer_gibbs(net, query, evidence,
                                             burn_in=config.burn_in,
                                             n_samples=config.samples, seed=seed)

    for name, prob in sorted(results.items(), key=lambda kv: (-kv[1], kv[0])):
        print(f"{prob:.6f}\t{name}")
    return 0


def _parse_evidence(items):
    evidence = {}
    objects = []
    for item in items:
        name, _, value = item.partition("=")
        name = name.strip()
        value = value.strip().lower()
        if value not in ("true", "false", "1", "0"):
            raise ConfigError(f"evidence {item!r} needs =true or =false")
        evidence[name] = value in ("true", "1")
        obj = _object_of(name)
        if obj and obj not in objects:
            objects.append(obj)
    return evidence, objects


def _object_of(variable_text):
    try:
        return bln.AbstractVar.parse(variable_text.replace("*", "STAR")).args[0]
    except ValueError:
        return None


def _expand_query(pattern, net):
    if "*" not in pattern:
        if pattern not in net.index:
            raise ConfigError(_unknown_variable(pattern, net))
        return [pattern]
    prefix, _, suffix = pattern.partition("*")
    matches = [name for name in net.names
               if name.startswith(prefix) and name.endswith(suffix)]
    if not matches:
        raise ConfigError(f"query pattern {pattern!r} matches no variables")
    return matches


def _unknown_variable(name, net):
    near = difflib.get_close_matches(name, net.names, n=3)
    hint = f"; near matches: {', '.join(near)}" if near else ""
    return f"unknown variable {name!r}{hint}"


def cmd_evaluate(args) -> int:
    config, raw = load_config(args.config)
    apply_overrides(config, args)
    config.validate()

    scenario_names = [s.strip() for s in (config.scenarios or "").split(",") if s.strip()]
    runs: list[tuple[str, PipelineConfig]] = []
    if scenario_names:
        for name in scenario_names:
            sub = PipelineConfig(**{f.name: getattr(config, f.name)
                                    for f in fields(PipelineConfig)})
            for key in ("seeds", "gold", "environment", "alpha", "root_prior",
                        "min_children", "ic_threshold", "n_worlds", "samples"):
                scoped = raw.get(f"{name}.{key}")
                if scoped is not None:
                    setattr(sub, key, _convert(key, scoped))
            runs.append((name, sub))
    else:
        runs.append((Path(config.seeds).stem or "scenario", config))

    reports: dict[str, evaluation.AccuracyReport] = {}
    for name, sub in runs:
        if not sub.gold:
            raise ConfigError(f"scenario {name!r} has no gold file configured")
        products = run_generation(sub)
        seeds = list(products.assignment.choices)
        objects = [evaluation.object_name(i) for i in range(len(seeds))]
        net = _stage("ground", bln.ground, products.declaration,
                     products.fragments, objects)
        results = _stage("scenario", evaluation.run_scenario, net, seeds,
                         sub.method, sub.samples, sub.burn_in,
                         sub.seed + SCENARIO_SEED_OFFSET)
        gold = evaluation.load_gold(sub.gold)
        reports[name] = _stage("score", evaluation.score, results, gold,
                               products.assignment)

    table = evaluation.format_report(reports)
    machine = evaluation.machine_report(reports)
    print(table, end="")
    if args.out_dir:
        out_dir = Path(args.out_dir)
        out_dir.mkdir(parents=True, exist_ok=True)
        (out_dir / "report.txt").write_text(table, encoding="utf-8")
        (out_dir / "report.tsv").write_text(machine, encoding="utf-8")
        print(f"wrote report.txt and report.tsv to {out_dir}")
    return 0


# ---------------------------------------------------------------------------
# Argument parsing
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="situnet",
        description="Generate and query situated commonsense knowledge networks.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--seeds", help="seed word file (one word per line)")
        p.add_argument("--environment", help="current environment term")
        p.add_argument("--min-children", dest="min_children", type=int)
        p.add_argument("--ic-threshold", dest="ic_threshold", type=float)
        p.add_argument("--alpha", type=float,
                       help="weight of relation strength vs relatedness")
        p.add_argument("--root-prior", dest="root_prior", type=float)
        p.add_argument("--samples", type=int)
        p.add_argument("--n-worlds", dest="n_worlds", type=int)
        p.add_argument("--method", choices=("exact", "lw", "gibbs"))
        p.add_argument("--seed", type=int, help="master random seed")

    gen = sub.add_parser("generate", help="build graph, model, and assignment files")
    gen.add_argument("--config", required=True)
    gen.add_argument("--out-dir", default="out")
    add_common(gen)
    gen.set_defaults(func=cmd_generate)

    inf = sub.add_parser("infer", help="answer queries against a model file")
    inf.add_argument("--config")
    inf.add_argument("--model", required=True)
    inf.add_argument("--evidence", action="append", default=[],
                     help="assignments like 'IsA(obj1,sock)=true'; repeatable")
    inf.add_argument("--query", action="append", required=True,
                     help="variable or pattern like 'AtLocation(obj1,*)'; repeatable")
    add_common(inf)
    inf.set_defaults(func=cmd_infer)

    ev = sub.add_parser("evaluate", help="score scenarios against gold labels")
    ev.add_argument("--config", required=True)
    ev.add_argument("--out-dir")
    add_common(ev)
    ev.set_defaults(func=cmd_evaluate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (StageError, ConfigError) as error:
        print(f"error: {error}", file=sys.stderr)
        return 1
    except Exception as error:  # surface anything else with a nonzero exit
        print(f"error: {type(error).__name__}: {error}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
