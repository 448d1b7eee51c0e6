"""DOT export of Hasse diagrams for filter lattices and spectra."""

from __future__ import annotations

from typing import Callable, List, Sequence, Tuple


def hasse_covers(
    items: Sequence, leq: Callable[[object, object], bool]
) -> List[Tuple[int, int]]:
    """Covering pairs (i, j): item i below item j with nothing in between."""
    n = len(items)
    covers = []
    for i in range(n):
        for j in range(n):
            if i == j or not leq(items[i], items[j]) or leq(items[j], items[i]):
                continue
            between = any(
                k != i
                and k != j
                and leq(items[i], items[k])
                and leq(items[k], items[j])
                and not leq(items[k], items[i])
                and not leq(items[j], items[k])
                for k in range(n)
            )
            if not between:
                covers.append((i, j))
    return covers


def poset_dot(labels: Sequence[str], covers: Sequence[Tuple[int, int]], name: str = "poset") -> str:
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for i, label in enumerate(labels):
        escaped = label.replace('"', '\\"')
        lines.append(f'  n{i} [label="{escaped}"];')
    for i, j in covers:
        lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
