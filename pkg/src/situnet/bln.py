"""Bayesian Logic Network: template model, learning, grounding, inference.

A model is a declaration (types, predicate signatures, entities) plus a
set of fragments.  Each fragment is a conditional dependence template
between abstract boolean variables such as ``IsA(x, garlic)``, where
``x`` is a meta-variable that grounding replaces with concrete objects.
A fragment's conditional probability function (CPF) is a table with one
row per parent configuration; rows are ordered by binary counting with
the first parent as the most significant bit and false < true.

Deterministic first-order constraints are supported through auxiliary
boolean variables whose CPF is the constraint's truth table; clamping an
auxiliary variable to true enforces its formula during inference.

Exact inference enumerates the joint and is guarded to 25 free
variables; likelihood weighting and Gibbs sampling scale further.  Every
sampling routine takes an explicit seed and owns its generator, so
results are reproducible and calls may run concurrently on one network.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field, replace

import numpy as np

from .netgen import ConceptGraph

MAX_PARENTS = 12  # full-table CPF guard: 2^12 rows
ENUMERATION_LIMIT = 25

TYPES = ("object", "concept", "property", "location", "affordance")

SIGNATURES = {
    "IsA": ("object", "concept"),
    "HasProperty": ("object", "property"),
    "AtLocation": ("object", "location"),
    "UsedFor": ("object", "affordance"),
}

PREDICATE_FOR_KIND = {
    "concept": "IsA",
    "property": "HasProperty",
    "location": "AtLocation",
    "affordance": "UsedFor",
}

META_VARIABLE = "x"


class DenseModelError(ValueError):
    """A node has more parents than a full-table CPF can support."""


class GroundingCycleError(ValueError):
    def __init__(self, cycle):
        super().__init__("ground network is cyclic: " + " -> ".join(cycle))
        self.cycle = cycle


class EnumerationLimitError(ValueError):
    """Too many free variables for exact enumeration; use sampling."""


class ErgodicityError(ValueError):
    """An unclamped variable has a deterministic CPF row; Gibbs would not mix."""


class ZeroWeightWarning(UserWarning):
    """All likelihood-weighting samples had zero weight (contradictory evidence)."""


# ---------------------------------------------------------------------------
# Template model
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AbstractVar:
    """A predicate applied to parameters; ``x`` marks the object slot."""

    predicate: str
    args: tuple[str, ...]

    def __str__(self):
        return f"{self.predicate}({','.join(self.args)})"

    def ground(self, binding: dict[str, str]) -> str:
        args = ",".join(binding.get(a, a) for a in self.args)
        return f"{self.predicate}({args})"

    @classmethod
    def parse(cls, text: str) -> "AbstractVar":
        name, _, rest = text.strip().partition("(")
        if not rest.endswith(")"):
            raise ValueError(f"bad variable syntax: {text!r}")
        args = tuple(a.strip() for a in rest[:-1].split(","))
        return cls(name, args)


@dataclass
class Fragment:
    """Conditional dependence template with a full-table CPF.

    ``cpf[i]`` is P(child = true | configuration i).  A frozen fragment
    keeps its table through :func:`learn_cpfs`, which is how fixed
    probability-one rules are pinned in a model file.
    """

    child: AbstractVar
    parents: list[AbstractVar]
    cpf: np.ndarray
    frozen: bool = False

    def __post_init__(self):
        self.cpf = np.asarray(self.cpf, dtype=float)
        if self.cpf.shape != (2 ** len(self.parents),):
            raise ValueError(
                f"fragment {self.child}: cpf must have {2 ** len(self.parents)} rows")
        if np.any(self.cpf < 0) or np.any(self.cpf > 1):
            raise ValueError(f"fragment {self.child}: probabilities outside [0, 1]")


@dataclass(frozen=True)
class Declaration:
    types: frozenset[str]
    signatures: dict[str, tuple[str, ...]]
    entities: dict[str, frozenset[str]]

    def __post_init__(self):
        for name, type_set in self.entities.items():
            if not type_set:
                raise ValueError(f"entity {name!r} has an empty type set")
        for pred, param_types in self.signatures.items():
            for t in param_types:
                if t not in self.types:
                    raise ValueError(f"signature {pred} uses undeclared type {t!r}")


# -- first-order boolean formulas -------------------------------------------


class Formula:
    """Base class; subclasses form a small boolean AST over abstract vars."""

    def atoms(self) -> list[AbstractVar]:
        raise NotImplementedError

    def evaluate(self, values: dict[AbstractVar, bool]) -> bool:
        raise NotImplementedError


@dataclass(frozen=True)
class Atom(Formula):
    var: AbstractVar

    def atoms(self):
        return [self.var]

    def evaluate(self, values):
        return values[self.var]


@dataclass(frozen=True)
class Not(Formula):
    operand: Formula

    def atoms(self):
        return self.operand.atoms()

    def evaluate(self, values):
        return not self.operand.evaluate(values)


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula

    def atoms(self):
        return self.left.atoms() + self.right.atoms()

    def evaluate(self, values):
        return self.left.evaluate(values) and self.right.evaluate(values)


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula

    def atoms(self):
        return self.left.atoms() + self.right.atoms()

    def evaluate(self, values):
        return self.left.evaluate(values) or self.right.evaluate(values)


@dataclass(frozen=True)
class Implies(Formula):
    left: Formula
    right: Formula

    def atoms(self):
        return self.left.atoms() + self.right.atoms()

    def evaluate(self, values):
        return (not self.left.evaluate(values)) or self.right.evaluate(values)


@dataclass(frozen=True)
class LogicConstraint:
    """A deterministic rule; meta-variables are universally quantified."""

    formula: Formula

    def atoms(self) -> list[AbstractVar]:
        return list(dict.fromkeys(self.formula.atoms()))


# ---------------------------------------------------------------------------
# Model construction from a concept graph
# ---------------------------------------------------------------------------


def variable_for_node(node) -> AbstractVar:
    return AbstractVar(PREDICATE_FOR_KIND[node.kind], (META_VARIABLE, node.id))


def model_from_graph(graph: ConceptGraph) -> tuple[Declaration, list[Fragment]]:
    """One abstract variable and one fragment per graph node.

    A node's fragment parents are the variables of its incoming edges:
    IsA edges run specific -> general, so the child concept's variable
    parents the parent concept's variable, and attribute variables are
    parented by the concept variables pointing at them.  CPFs start
    uninformed (all rows 0.5) until :func:`learn_cpfs`.
    """
    var_of = {node_id: variable_for_node(graph.nodes[node_id]) for node_id in graph.nodes}
    incoming = graph.incoming()

    fragments = []
    for node_id in sorted(graph.nodes):
        parent_vars = sorted({str(var_of[e.src]) for e in incoming[node_id]})
        if len(parent_vars) > MAX_PARENTS:
            raise DenseModelError(
                f"node {node_id!r} has {len(parent_vars)} parents (max {MAX_PARENTS}); "
                "split the node or prune its relations")
        parents = [AbstractVar.parse(p) for p in parent_vars]
        fragments.append(Fragment(
            child=var_of[node_id], parents=parents,
            cpf=np.full(2 ** len(parents), 0.5)))

    entities = {node_id: frozenset({graph.nodes[node_id].kind}) for node_id in sorted(graph.nodes)}
    decl = Declaration(types=frozenset(TYPES), signatures=dict(SIGNATURES), entities=entities)
    return decl, fragments


# ---------------------------------------------------------------------------
# Evidence simulation and CPF learning
# ---------------------------------------------------------------------------


@dataclass
class EvidenceSet:
    """Sampled worlds over the abstract variables of one object binding.

    ``worlds`` is a (n_worlds, n_variables) boolean matrix; every row is
    a complete assignment.
    """

    variables: list[str]
    worlds: np.ndarray

    def __post_init__(self):
        self.worlds = np.asarray(self.worlds, dtype=bool)
        if self.worlds.ndim != 2 or self.worlds.shape[1] != len(self.variables):
            raise ValueError("worlds matrix does not match the variable list")

    def column(self, variable: str) -> np.ndarray:
        return self.worlds[:, self.variables.index(variable)]


def simulate_evidence(graph: ConceptGraph, provider, alpha: float, n_worlds: int,
                      seed: int, root_prior: float = 0.5) -> EvidenceSet:
    """Sample complete worlds from the graph, top-down in topological order.

    Each edge activates its target with probability
    ``alpha * strength + (1 - alpha) * provider.score(src_term, dst_term)``
    and true parents combine by noisy-OR.  Parentless variables are drawn
    from ``root_prior`` (nodes carry no prior of their own).
    """
    if n_worlds < 1:
        raise ValueError("n_worlds must be >= 1")
    if not 0.0 <= alpha <= 1.0:
        raise ValueError("alpha must lie in [0, 1]")

    order = _graph_topo_order(graph)
    var_names = [str(variable_for_node(graph.nodes[i])) for i in order]
    col = {node_id: pos for pos, node_id in enumerate(order)}

    incoming = graph.incoming()
    edge_probs: dict[str, list[tuple[int, float]]] = {}
    for node_id in order:
        probs = []
        for e in incoming[node_id]:
            src = graph.nodes[e.src]
            dst = graph.nodes[e.dst]
            p = alpha * e.strength + (1.0 - alpha) * provider.score(src.term, dst.term)
            probs.append((col[e.src], min(1.0, max(0.0, p))))
        edge_probs[node_id] = probs

    rng = np.random.default_rng(seed)
    worlds = np.zeros((n_worlds, len(order)), dtype=bool)
    for node_id in order:
        probs = edge_probs[node_id]
        if not probs:
            p_true = np.full(n_worlds, root_prior)
        else:
            miss = np.ones(n_worlds)
            for src_col, p in probs:
                miss *= np.where(worlds[:, src_col], 1.0 - p, 1.0)
            p_true = 1.0 - miss
        worlds[:, col[node_id]] = rng.random(n_worlds) < p_true
    return EvidenceSet(variables=var_names, worlds=worlds)


def _graph_topo_order(graph: ConceptGraph) -> list[str]:
    indegree = {i: 0 for i in graph.nodes}
    outgoing: dict[str, list[str]] = {i: [] for i in graph.nodes}
    for e in graph.edges:
        indegree[e.dst] += 1
        outgoing[e.src].append(e.dst)
    ready = sorted(i for i, d in indegree.items() if d == 0)
    order = []
    while ready:
        node = ready.pop(0)
        order.append(node)
        for nxt in sorted(outgoing[node]):
            indegree[nxt] -= 1
            if indegree[nxt] == 0:
                ready.append(nxt)
        ready.sort()
    if len(order) != len(graph.nodes):
        raise ValueError("graph contains a cycle; cannot sample top-down")
    return order


def learn_cpfs(fragments, evidence: EvidenceSet, pseudocount: float = 1.0) -> list[Fragment]:
    """Maximum-likelihood CPF rows with optional Laplace smoothing.

    Each row becomes (true count + pseudocount) / (count + 2 *
    pseudocount) for its parent configuration; configurations never
    observed fall back to 0.5.  Frozen fragments pass through unchanged.
    """
    col = {name: i for i, name in enumerate(evidence.variables)}
    out = []
    for frag in fragments:
        if frag.frozen:
            out.append(frag)
            continue
        child_col = col[str(frag.child)]
        k = len(frag.parents)
        if k == 0:
            total = evidence.worlds.shape[0]
            true_count = int(evidence.worlds[:, child_col].sum())
            row = _smoothed(true_count, total, pseudocount)
            out.append(replace(frag, cpf=np.array([row])))
            continue
        parent_cols = [col[str(p)] for p in frag.parents]
        weights = 1 << np.arange(k - 1, -1, -1)
        configs = evidence.worlds[:, parent_cols].astype(int) @ weights
        totals = np.bincount(configs, minlength=2 ** k)
        trues = np.bincount(configs[evidence.worlds[:, child_col]], minlength=2 ** k)
        rows = np.empty(2 ** k)
        for i in range(2 ** k):
            rows[i] = _smoothed(int(trues[i]), int(totals[i]), pseudocount)
        out.append(replace(frag, cpf=rows))
    return out


def _smoothed(true_count, total, pseudocount):
    denominator = total + 2.0 * pseudocount
    if denominator == 0:
        return 0.5
    return (true_count + pseudocount) / denominator


# ---------------------------------------------------------------------------
# Grounding
# ---------------------------------------------------------------------------


@dataclass
class GroundNetwork:
    """Grounded directed network: variables, parent lists, CPF tables."""

    names: list[str]
    parents: list[list[int]]
    cpfs: list[np.ndarray]
    aux: list[str] = field(default_factory=list)

    def __post_init__(self):
        self.index = {name: i for i, name in enumerate(self.names)}
        self._topo: list[int] | None = None
        self._children: list[list[int]] | None = None

    def __len__(self):
        return len(self.names)

    def topo_order(self) -> list[int]:
        if self._topo is None:
            indegree = [len(p) for p in self.parents]
            children = self.children()
            ready = sorted(i for i, d in enumerate(indegree) if d == 0)
            order = []
            while ready:
                v = ready.pop(0)
                order.append(v)
                for c in children[v]:
                    indegree[c] -= 1
                    if indegree[c] == 0:
                        ready.append(c)
                ready.sort()
            if len(order) != len(self.names):
                raise GroundingCycleError(self._find_cycle())
            self._topo = order
        return self._topo

    def children(self) -> list[list[int]]:
        if self._children is None:
            out: list[list[int]] = [[] for _ in self.names]
            for v, ps in enumerate(self.parents):
                for p in ps:
                    out[p].append(v)
            self._children = out
        return self._children

    def _find_cycle(self):
        state = [0] * len(self.names)
        path: list[int] = []

        def dfs(v):
            state[v] = 1
            path.append(v)
            for p in self.parents[v]:
                if state[p] == 1:
                    cycle = path[path.index(p):] + [p]
                    return [self.names[i] for i in cycle]
                if state[p] == 0:
                    found = dfs(p)
                    if found:
                        return found
            path.pop()
            state[v] = 2
            return None

        for v in range(len(self.names)):
            if state[v] == 0:
                found = dfs(v)
                if found:
                    return found
        return []

    def components(self) -> list[list[int]]:
        """Weakly connected components, each sorted by variable index."""
        neighbor: list[set[int]] = [set() for _ in self.names]
        for v, ps in enumerate(self.parents):
            for p in ps:
                neighbor[v].add(p)
                neighbor[p].add(v)
        seen = [False] * len(self.names)
        components = []
        for start in range(len(self.names)):
            if seen[start]:
                continue
            group = []
            frontier = [start]
            seen[start] = True
            while frontier:
                v = frontier.pop()
                group.append(v)
                for n in neighbor[v]:
                    if not seen[n]:
                        seen[n] = True
                        frontier.append(n)
            components.append(sorted(group))
        return components

    def subnetwork(self, variable_ids) -> "GroundNetwork":
        """Restriction to a parent-closed variable subset."""
        ids = sorted(variable_ids)
        remap = {old: new for new, old in enumerate(ids)}
        for v in ids:
            for p in self.parents[v]:
                if p not in remap:
                    raise ValueError("subset is not closed under parents")
        return GroundNetwork(
            names=[self.names[v] for v in ids],
            parents=[[remap[p] for p in self.parents[v]] for v in ids],
            cpfs=[self.cpfs[v] for v in ids],
            aux=[a for a in self.aux if a in {self.names[v] for v in ids}],
        )


def ground(decl: Declaration, fragments, objects, constraints=()) -> GroundNetwork:
    """Instantiate the per-object subnetworks plus constraint auxiliaries.

    Every fragment is replicated once per object with the meta-variable
    substituted; each ground constraint contributes one boolean auxiliary
    variable whose parents are the constraint's atoms and whose CPF is 1
    exactly on satisfying configurations.
    """
    if not objects:
        raise ValueError("at least one object is required")

    names: list[str] = []
    parent_names: list[list[str]] = []
    cpfs: list[np.ndarray] = []
    for obj in objects:
        binding = {META_VARIABLE: obj}
        for frag in fragments:
            names.append(frag.child.ground(binding))
            parent_names.append([p.ground(binding) for p in frag.parents])
            cpfs.append(np.array(frag.cpf, dtype=float))

    aux: list[str] = []
    for c_idx, constraint in enumerate(constraints):
        atoms = constraint.atoms()
        for obj in objects:
            binding = {META_VARIABLE: obj}
            grounded = [a.ground(binding) for a in atoms]
            table = np.zeros(2 ** len(atoms))
            for config in range(2 ** len(atoms)):
                values = {
                    atom: bool((config >> (len(atoms) - 1 - i)) & 1)
                    for i, atom in enumerate(atoms)
                }
                table[config] = 1.0 if constraint.formula.evaluate(values) else 0.0
            name = f"constraint{c_idx}({obj})"
            names.append(name)
            parent_names.append(grounded)
            cpfs.append(table)
            aux.append(name)

    index = {name: i for i, name in enumerate(names)}
    parents = []
    for var, ps in zip(names, parent_names):
        try:
            parents.append([index[p] for p in ps])
        except KeyError as missing:
            raise ValueError(f"variable {var} has undeclared parent {missing}") from None

    net = GroundNetwork(names=names, parents=parents, cpfs=cpfs, aux=aux)
    net.topo_order()  # raises GroundingCycleError on cyclic fragment structure
    return net


# ---------------------------------------------------------------------------
# Inference
# ---------------------------------------------------------------------------


def _config_index(net, v, values):
    idx = 0
    for p in net.parents[v]:
        idx = (idx << 1) | values[p]
    return idx


def _resolve_evidence(net, evidence):
    out = {}
    for name, value in evidence.items():
        if name not in net.index:
            raise KeyError(f"unknown evidence variable {name!r}")
        out[net.index[name]] = bool(value)
    return out


def infer_exact(net: GroundNetwork, query: str, evidence=None) -> float:
    """P(query = true | evidence) by full enumeration of the joint.

    Guarded to :data:`ENUMERATION_LIMIT` free variables.  Auxiliary
    variables for constraints that should hold must be clamped true in
    the evidence by the caller.
    """
    evidence = evidence or {}
    if query not in net.index:
        raise KeyError(f"unknown query variable {query!r}")
    ev = _resolve_evidence(net, evidence)
    q = net.index[query]
    if q in ev:
        return 1.0 if ev[q] else 0.0

    free = len(net.names) - len(ev)
    if free > ENUMERATION_LIMIT:
        raise EnumerationLimitError(
            f"{free} free variables exceed the exact-enumeration guard "
            f"({ENUMERATION_LIMIT}); use infer_lw or infer_gibbs")

    order = net.topo_order()
    values = [0] * len(net.names)

    def enumerate_from(pos: int) -> float:
        if pos == len(order):
            return 1.0
        v = order[pos]
        p_true = net.cpfs[v][_config_index(net, v, values)]
        if v in ev or v == q:
            want = ev[v] if v in ev else bool(values[q])
            prob = p_true if want else 1.0 - p_true
            if prob == 0.0:
                return 0.0
            values[v] = 1 if want else 0
            return prob * enumerate_from(pos + 1)
        total = 0.0
        for val in (0, 1):
            prob = p_true if val else 1.0 - p_true
            if prob == 0.0:
                continue
            values[v] = val
            total += prob * enumerate_from(pos + 1)
        values[v] = 0
        return total

    values[q] = 1
    numerator = enumerate_from(0)
    values[q] = 0
    complement = enumerate_from(0)
    denominator = numerator + complement
    if denominator == 0.0:
        raise ValueError("evidence has probability zero")
    return numerator / denominator


def lw_sample(net: GroundNetwork, evidence, n_samples: int, rng) -> tuple[np.ndarray, np.ndarray]:
    """Likelihood-weighted samples: (n_samples, n_vars) states and weights."""
    ev = _resolve_evidence(net, evidence)
    states = np.zeros((n_samples, len(net.names)), dtype=bool)
    weights = np.ones(n_samples)
    for v in net.topo_order():
        ps = net.parents[v]
        if ps:
            k = len(ps)
            bits = 1 << np.arange(k - 1, -1, -1)
            config = states[:, ps].astype(int) @ bits
            p_true = net.cpfs[v][config]
        else:
            p_true = np.full(n_samples, net.cpfs[v][0])
        if v in ev:
            states[:, v] = ev[v]
            weights *= p_true if ev[v] else 1.0 - p_true
        else:
            states[:, v] = rng.random(n_samples) < p_true
    return states, weights


def infer_lw(net: GroundNetwork, query: str, evidence=None, n_samples: int = 50_000,
             seed: int = 0) -> float:
    """Likelihood-weighted estimate of P(query | evidence).

    Deterministic for a given seed.  If every sampled weight is zero the
    evidence is contradictory; a :class:`ZeroWeightWarning` is emitted
    and 0.5 returned.
    """
    estimates = lw_estimates(net, [query], evidence, n_samples, seed)
    return estimates[query]


def lw_estimates(net: GroundNetwork, queries, evidence=None, n_samples: int = 50_000,
                 seed: int = 0) -> dict[str, float]:
    """Estimates for many queries from one shared weighted sample set."""
    if n_samples < 1:
        raise ValueError("n_samples must be >= 1")
    evidence = evidence or {}
    for q in queries:
        if q not in net.index:
            raise KeyError(f"unknown query variable {q!r}")
    rng = np.random.default_rng(seed)
    states, weights = lw_sample(net, evidence, n_samples, rng)
    total = weights.sum()
    if total == 0.0:
        warnings.warn("all sample weights are zero; evidence is contradictory",
                      ZeroWeightWarning, stacklevel=2)
        return {q: 0.5 for q in queries}
    ev = _resolve_evidence(net, evidence)
    out = {}
    for q in queries:
        v = net.index[q]
        if v in ev:
            out[q] = 1.0 if ev[v] else 0.0
        else:
            out[q] = float(weights[states[:, v]].sum() / total)
    return out


def infer_gibbs(net: GroundNetwork, query: str, evidence=None, burn_in: int = 1000,
                n_samples: int = 50_000, seed: int = 0, n_chains: int = 512) -> float:
    """Single-site Gibbs estimate of P(query | evidence).

    ``n_samples`` counts collected states across all chains; each chain
    runs ``burn_in`` warm-up sweeps first.  Unclamped variables must have
    strictly non-deterministic CPF rows (otherwise the chain cannot
    leave absorbing states and an :class:`ErgodicityError` is raised).
    """
    return gibbs_estimates(net, [query], evidence, burn_in, n_samples, seed,
                           n_chains)[query]


def gibbs_estimates(net: GroundNetwork, queries, evidence=None, burn_in: int = 1000,
                    n_samples: int = 50_000, seed: int = 0,
                    n_chains: int = 512) -> dict[str, float]:
    if n_samples < 1:
        raise ValueError("n_samples must be >= 1")
    evidence = evidence or {}
    ev = _resolve_evidence(net, evidence)
    for q in queries:
        if q not in net.index:
            raise KeyError(f"unknown query variable {q!r}")
    for v in range(len(net.names)):
        if v in ev:
            continue
        cpf = net.cpfs[v]
        if np.any(cpf == 0.0) or np.any(cpf == 1.0):
            raise ErgodicityError(
                f"variable {net.names[v]} has a deterministic CPF row and is not "
                "clamped by evidence; use infer_lw instead")

    rng = np.random.default_rng(seed)
    n_vars = len(net.names)
    # ancestral initialization: forward-sample each chain so the sweep
    # starts near the target distribution instead of uniform noise
    states = np.zeros((n_chains, n_vars), dtype=bool)
    for v in net.topo_order():
        if v in ev:
            states[:, v] = ev[v]
            continue
        ps = net.parents[v]
        if ps:
            bits = 1 << np.arange(len(ps) - 1, -1, -1)
            p_true = net.cpfs[v][states[:, ps].astype(int) @ bits]
        else:
            p_true = np.full(n_chains, net.cpfs[v][0])
        states[:, v] = rng.random(n_chains) < p_true

    children = net.children()
    free_order = [v for v in net.topo_order() if v not in ev]
    # Precomputed index arithmetic: for each free variable and each of its
    # children, the bit weight of the variable inside the child's CPF row.
    child_info = {
        v: [(c, 1 << (len(net.parents[c]) - 1 - net.parents[c].index(v)))
            for c in children[v]]
        for v in free_order
    }
    parent_bits = {
        v: (np.array(net.parents[v], dtype=int),
            1 << np.arange(len(net.parents[v]) - 1, -1, -1))
        for v in range(n_vars)
    }

    per_chain = -(-n_samples // n_chains)  # ceil
    collected = {net.index[q]: 0 for q in queries}
    count = 0

    for sweep in range(burn_in + per_chain):
        for v in free_order:
            cols, bits = parent_bits[v]
            if cols.size:
                config = states[:, cols].astype(int) @ bits
                p1 = net.cpfs[v][config]
            else:
                p1 = np.full(n_chains, net.cpfs[v][0])
            w1 = p1.copy()
            w0 = 1.0 - p1
            for c, bit in child_info[v]:
                c_cols, c_bits = parent_bits[c]
                base = states[:, c_cols].astype(int) @ c_bits
                base -= np.where(states[:, v], bit, 0)
                p_child_if_true = net.cpfs[c][base + bit]
                p_child_if_false = net.cpfs[c][base]
                child_state = states[:, c]
                w1 *= np.where(child_state, p_child_if_true, 1.0 - p_child_if_true)
                w0 *= np.where(child_state, p_child_if_false, 1.0 - p_child_if_false)
            total = w1 + w0
            p = np.where(total > 0, w1 / np.where(total > 0, total, 1.0), 0.5)
            states[:, v] = rng.random(n_chains) < p
        if sweep >= burn_in:
            for v in collected:
                collected[v] += int(states[:, v].sum())
            count += n_chains

    out = {}
    for q in queries:
        v = net.index[q]
        if v in ev:
            out[q] = 1.0 if ev[v] else 0.0
        else:
            out[q] = collected[v] / count
    return out


# ---------------------------------------------------------------------------
# Model serialization
# ---------------------------------------------------------------------------


def write_model(decl: Declaration, fragments, path) -> None:
    """Text layout: declaration records, then one FRAGMENT record per node.

    CPF rows are written in binary-counting order of the parent
    configurations (first parent most significant, false < true).  A
    trailing ``frozen`` flag pins a fragment against relearning; editing
    a row by hand (e.g. to force a rule to probability one) is supported.
    """
    with open(path, "w", encoding="utf-8") as out:
        for t in sorted(decl.types):
            out.write(f"TYPE\t{t}\n")
        for pred in sorted(decl.signatures):
            params = "\t".join(decl.signatures[pred])
            out.write(f"SIG\t{pred}\t{params}\n")
        for entity in sorted(decl.entities):
            types = ",".join(sorted(decl.entities[entity]))
            out.write(f"ENTITY\t{entity}\t{types}\n")
        for frag in fragments:
            parents = ",".join(str(p) for p in frag.parents) or "-"
            rows = " ".join(repr(float(p)) for p in frag.cpf)
            flag = "frozen" if frag.frozen else "-"
            out.write(f"FRAGMENT\t{frag.child}\t{parents}\t{rows}\t{flag}\n")


def read_model(path) -> tuple[Declaration, list[Fragment]]:
    types: set[str] = set()
    signatures: dict[str, tuple[str, ...]] = {}
    entities: dict[str, frozenset[str]] = {}
    fragments: list[Fragment] = []
    with open(path, encoding="utf-8") as handle:
        for line_no, raw in enumerate(handle, start=1):
            line = raw.rstrip("\n")
            if not line.strip() or line.startswith("#"):
                continue
            cols = line.split("\t")
            tag = cols[0]
            if tag == "TYPE" and len(cols) == 2:
                types.add(cols[1])
            elif tag == "SIG" and len(cols) >= 3:
                signatures[cols[1]] = tuple(cols[2:])
            elif tag == "ENTITY" and len(cols) == 3:
                entities[cols[1]] = frozenset(cols[2].split(","))
            elif tag == "FRAGMENT" and len(cols) == 5:
                child = AbstractVar.parse(cols[1])
                parents = [AbstractVar.parse(p) for p in _split_vars(cols[2])]
                cpf = np.array([float(x) for x in cols[3].split()])
                fragments.append(Fragment(child=child, parents=parents, cpf=cpf,
                                          frozen=cols[4] == "frozen"))
            else:
                raise ValueError(f"bad model record on line {line_no}: {raw!r}")
    decl = Declaration(types=frozenset(types), signatures=signatures, entities=entities)
    return decl, fragments


def _split_vars(text: str) -> list[str]:
    """Split ``P(a,b),Q(c,d)`` on the commas between variables only."""
    if text == "-":
        return []
    parts = []
    depth = 0
    current = []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(current))
            current = []
        else:
            current.append(ch)
    if current:
        parts.append("".join(current))
    return parts
