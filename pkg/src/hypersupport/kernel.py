"""Twin-class data reduction with the exact size threshold.

The reduction removes one vertex from any twin class larger than the
threshold psi(m, r) = 2^(6r * 2^(m*(2r^2+r+1)) * (r+1)^(32r^2+8r)).  The
double exponential is far beyond direct evaluation (log2 of the threshold
already exceeds 10^14 at m = r = 1), so all comparisons happen in log2
space with arbitrary-precision integers: a class of size s exceeds the
threshold exactly when s > 2^L for L = psi_log2(m, r), decided from the bit
length of s without ever materializing 2^L.

Override thresholds exist solely to make the reduction machinery testable
at desk scale; results computed under an override do not carry the exact
rule's guarantee and are labeled as such by the CLI.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .hypercore import Hypergraph, remove_vertices, twin_partition


def psi_log2(m: int, r: int) -> int:
    """log2 of the twin-class threshold, exactly."""
    _validate(m, r)
    return 6 * r * 2 ** (m * (2 * r * r + r + 1)) * (r + 1) ** (32 * r * r + 8 * r)


def kernel_vertex_bound_log2(m: int, r: int) -> int:
    """log2 of the post-reduction vertex bound 2^m * psi(m, r)."""
    _validate(m, r)
    return m + psi_log2(m, r)


def _validate(m: int, r: int) -> None:
    for name, value in (("m", m), ("r", r)):
        if not isinstance(value, int) or isinstance(value, bool) or value < 1:
            raise DomainError(f"{name} must be an integer >= 1")


def exceeds_power_of_two(value: int, log2_threshold: int) -> bool:
    """Whether ``value`` > 2**log2_threshold, without building the power.

    Safe for thresholds whose power could never be allocated; the power is
    materialized only when the bit lengths tie, in which case it is small.
    """
    if value <= 0:
        return False
    bits = value.bit_length()
    if bits > log2_threshold + 1:
        return True
    if bits < log2_threshold + 1:
        return False
    return value > (1 << log2_threshold)


@dataclass(frozen=True)
class PsiThreshold:
    """Twin-class size threshold: the exact formula or a test override."""

    mode: str  # "exact" or "override"
    override_value: int | None = None

    @classmethod
    def exact(cls) -> "PsiThreshold":
        return cls("exact")

    @classmethod
    def override(cls, value: int) -> "PsiThreshold":
        if not isinstance(value, int) or isinstance(value, bool) or value < 1:
            raise DomainError("override threshold must be an integer >= 1")
        return cls("override", value)

    def exceeded_by(self, class_size: int, m: int, r: int) -> bool:
        if self.mode == "override":
            assert self.override_value is not None
            return class_size > self.override_value
        return exceeds_power_of_two(class_size, psi_log2(m, r))


@dataclass(frozen=True)
class Removal:
    """One reduction step: which vertex left which class."""

    vertex: str
    class_id: int
    class_size_before: int

    def to_json_dict(self) -> dict:
        return {
            "vertex": self.vertex,
            "class_id": self.class_id,
            "class_size_before": self.class_size_before,
        }


def rule1_apply(
    hypergraph: Hypergraph, r: int, threshold: PsiThreshold
) -> tuple[Hypergraph, tuple[Removal, ...]]:
    """Exhaustively remove vertices from oversized twin classes.

    While some class exceeds the threshold, the canonically smallest vertex
    of the canonically smallest oversized class is removed.  Twin classes
    and the hyperedge count are recomputed after every removal (deleting a
    vertex can merge hyperedges, which changes m and the exact threshold).
    """
    if threshold.mode == "exact":
        _validate(max(hypergraph.m, 1), r)
    removals: list[Removal] = []
    current = hypergraph
    while True:
        partition = twin_partition(current)
        m = max(current.m, 1)  # threshold formula needs m >= 1
        oversized = None
        for class_id, cls in enumerate(partition.classes):
            if threshold.exceeded_by(len(cls), m, r):
                oversized = (class_id, cls)
                break
        if oversized is None:
            return current, tuple(removals)
        class_id, cls = oversized
        victim = cls[0]
        removals.append(Removal(victim, class_id, len(cls)))
        current = remove_vertices(current, [victim])


__all__ = [
    "psi_log2",
    "kernel_vertex_bound_log2",
    "exceeds_power_of_two",
    "PsiThreshold",
    "Removal",
    "rule1_apply",
]
