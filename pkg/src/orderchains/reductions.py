"""Tree-to-sequence reductions and the fuzz harness around them.

``reduce_tree`` writes out the sequence whose n-th term is the n-th
enumerated word when the tree contains it and the n-th filler word
otherwise.  Deep trees therefore produce long prefix-order chains, while
fillers, being pairwise incomparable and reverse-lex decreasing, can
contribute at most one term to any chain.  Pointwise maps lift the image
into bit-words or rationals without changing chain lengths.
"""

from __future__ import annotations

import csv
import random
from dataclasses import dataclass, replace
from typing import Callable

from .chains import Sequence, longest_chain
from .encodings import double_bits, word_to_bits, word_to_dyadic
from .errors import DomainMismatchError, ParseError
from .orders import Element, Order, PrefixOrder, RatLessOrder, ReverseLexOrder, Tag, make_element
from .trees import FiniteTree, filler, index_of, iter_words, word_at


@dataclass(frozen=True)
class PointwiseMap:
    """A named map applied term by term to a sequence."""

    name: str
    domain: Tag
    codomain: Tag
    fn: Callable

    def __call__(self, payload):
        return self.fn(payload)


POINTWISE_MAPS = {
    "double": PointwiseMap("double", Tag.NAT, Tag.WORD_BIT, double_bits),
    "binary": PointwiseMap("binary", Tag.WORD_NAT, Tag.WORD_BIT, word_to_bits),
    "rational": PointwiseMap("rational", Tag.WORD_NAT, Tag.RATIONAL, word_to_dyadic),
}


def lift_map(x: Sequence, pmap: PointwiseMap) -> Sequence:
    """Apply a pointwise map to every term of a sequence."""
    if x.tag is not pmap.domain:
        raise DomainMismatchError(
            f"map {pmap.name} lifts {pmap.domain.value} sequences, got {x.tag.value}"
        )
    return Sequence(
        pmap.codomain, tuple(make_element(pmap.codomain, pmap(el.value)) for el in x.items)
    )


def reduce_tree(tree: FiniteTree, horizon: int) -> Sequence:
    """First ``horizon`` terms of the reduction of the tree."""
    if horizon < 1:
        raise ValueError("horizon must be at least 1")
    items = []
    for n, w in enumerate(iter_words()):
        if n >= horizon:
            break
        payload = w if w in tree.nodes else filler(n)
        items.append(Element(Tag.WORD_NAT, payload))
    return Sequence(Tag.WORD_NAT, tuple(items))


def image_at(tree: FiniteTree, n: int) -> Element:
    """Single position of the reduction, without materialising a prefix."""
    w = word_at(n)
    payload = w if w in tree.nodes else filler(n)
    return Element(Tag.WORD_NAT, payload)


def chain_bound_within_horizon(tree: FiniteTree, horizon: int) -> int:
    """Longest prefix-order chain among tree words enumerated before the
    horizon.

    Because trees are prefix-closed and the enumeration never places a
    prefix after its extension, this equals one plus the length of the
    deepest node whose index falls inside the horizon.
    """
    best = -1
    for w in tree.nodes:
        if len(w) > best and index_of(w) < horizon:
            best = len(w)
    return best + 1


@dataclass(frozen=True)
class TreeGenSpec:
    """Deterministic random-tree parameters.

    Offspring counts follow a geometric law with the given mean,
    truncated at ``max_children``; growth stops at the depth cap and the
    node cap (breadth-first, so caps cut the deepest layer first).
    """

    seed: int
    depth_cap: int = 12
    node_cap: int = 500
    mean_children: float = 1.2
    max_children: int = 6

    def __post_init__(self):
        if self.depth_cap < 0 or self.node_cap < 1:
            raise ValueError("caps must be positive")
        if not 0 < self.mean_children:
            raise ValueError("mean_children must be positive")


def generate_tree(spec: TreeGenSpec) -> FiniteTree:
    """Grow a random prefix-closed tree; identical specs give identical trees."""
    rng = random.Random(spec.seed)
    p = spec.mean_children / (1.0 + spec.mean_children)
    nodes = {()}
    queue: list[tuple[int, ...]] = [()]
    while queue:
        w = queue.pop(0)
        if len(w) >= spec.depth_cap:
            continue
        k = 0
        while k < spec.max_children and rng.random() < p:
            k += 1
        for child_label in range(k):
            if len(nodes) >= spec.node_cap:
                return FiniteTree(frozenset(nodes))
            child = w + (child_label,)
            nodes.add(child)
            queue.append(child)
    return FiniteTree(frozenset(nodes))


@dataclass(frozen=True)
class ReductionPipeline:
    """Reduction target: optional pointwise stages plus the chain oracle."""

    name: str
    stages: tuple[PointwiseMap, ...]
    order: Order
    upper_sandwich: bool  # whether chains in the image exceed tree chains by at most one

    def apply(self, image: Sequence) -> Sequence:
        for stage in self.stages:
            image = lift_map(image, stage)
        return image


PIPELINE_NAMES = ("subset", "rl", "rational", "binary")


def make_pipeline(name: str) -> ReductionPipeline:
    if name == "subset":
        return ReductionPipeline("subset", (), PrefixOrder(strict=True, domain=Tag.WORD_NAT), True)
    if name == "rl":
        return ReductionPipeline("rl", (), ReverseLexOrder(strict=True), False)
    if name == "rational":
        return ReductionPipeline(
            "rational", (POINTWISE_MAPS["rational"],), RatLessOrder(strict=True), False
        )
    if name == "binary":
        return ReductionPipeline(
            "binary", (POINTWISE_MAPS["binary"],), PrefixOrder(strict=True, domain=Tag.WORD_BIT), False
        )
    raise ParseError(f"unknown pipeline {name!r}; choose one of {', '.join(PIPELINE_NAMES)}")


@dataclass(frozen=True)
class TrialResult:
    trial: int
    seed: int
    l_tree: int
    l_img: int
    verdict: str


@dataclass(frozen=True)
class FuzzReport:
    pipeline: str
    horizon: int
    rows: tuple[TrialResult, ...]

    @property
    def violations(self) -> tuple[TrialResult, ...]:
        return tuple(r for r in self.rows if r.verdict != "ok")

    @property
    def ok(self) -> bool:
        return not self.violations

    def write_csv(self, fp) -> None:
        writer = csv.writer(fp, lineterminator="\n")
        writer.writerow(["trial", "seed", "L_tree", "L_img", "verdict"])
        for r in self.rows:
            writer.writerow([r.trial, r.seed, r.l_tree, r.l_img, r.verdict])

    def summary(self) -> str:
        peak = max((r.l_img for r in self.rows), default=0)
        return (
            f"pipeline={self.pipeline} horizon={self.horizon} trials={len(self.rows)} "
            f"violations={len(self.violations)} max_L_img={peak}"
        )


def _trial_seed(base: int, trial: int) -> int:
    return base * 1_000_003 + trial


def fuzz_reduction(
    pipeline: ReductionPipeline, gen: TreeGenSpec, trials: int, horizon: int
) -> FuzzReport:
    """Generate trees, reduce them, and compare image chains against the
    in-horizon tree chain bound.

    For the prefix-order target the image chain length must sit in
    [L_tree, L_tree + 1]; the lifted targets keep the lower bound.
    """
    rows = []
    for trial in range(trials):
        seed = _trial_seed(gen.seed, trial)
        tree = generate_tree(replace(gen, seed=seed))
        image = pipeline.apply(reduce_tree(tree, horizon))
        l_img, _ = longest_chain(image, pipeline.order)
        l_tree = chain_bound_within_horizon(tree, horizon)
        if pipeline.upper_sandwich:
            ok = l_tree <= l_img <= l_tree + 1
        else:
            ok = l_img >= l_tree
        rows.append(TrialResult(trial, seed, l_tree, l_img, "ok" if ok else "violation"))
    return FuzzReport(pipeline.name, horizon, tuple(rows))
