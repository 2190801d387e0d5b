"""Synchronization forest over cuts.

Connected components of cuts are kept as a forest of rooted trees of height
one: every cut points directly at its root, so membership queries are O(1).
Each component carries two flags recording whether its cuts belong to the
left-cut set and the right-cut set.  New edges are buffered and applied in a
single linear recompression pass.
"""

from __future__ import annotations

from typing import Iterable, Literal

Side = Literal["L", "R"]


class SyncForest:
    """Height-one union structure over cuts ``0 .. n`` with L/R flags."""

    def __init__(self, n: int):
        if n < 0:
            raise ValueError("word length must be non-negative")
        self.n = n
        self.parent = list(range(n + 1))
        self._flag_l = [False] * (n + 1)
        self._flag_r = [False] * (n + 1)
        self.pending: list[tuple[int, int]] = []
        self.edges_added = 0

    def _check(self, c: int) -> None:
        if not 0 <= c <= self.n:
            raise ValueError(f"cut {c} out of range 0..{self.n}")

    def find(self, c: int) -> int:
        """Root of the component of ``c`` (constant time at height one)."""
        self._check(c)
        return self.parent[c]

    def has_flag(self, c: int, side: Side) -> bool:
        self._check(c)
        flags = self._flag_l if side == "L" else self._flag_r
        return flags[self.parent[c]]

    def set_flag(self, c: int, side: Side) -> None:
        """Flag the whole component of ``c``; idempotent."""
        self._check(c)
        flags = self._flag_l if side == "L" else self._flag_r
        flags[self.parent[c]] = True

    def add_edges(self, edges: Iterable[tuple[int, int]]) -> int:
        """Buffer edges; components change only at the next recompress."""
        added = 0
        for u, v in edges:
            self._check(u)
            self._check(v)
            self.pending.append((u, v))
            added += 1
        self.edges_added += added
        return added

    def recompress(self) -> int:
        """Merge buffered edges and restore height one.

        The new components are the connected closure of the old components
        plus the pending edges; each new root is the smallest cut of its
        component and its flags are the OR of the merged components' flags.
        Returns the number of cells touched (bounded by ``8n + 2``: one
        visit per cut plus two per traversed link, with fewer than ``3n``
        links).
        """
        if not self.pending:
            return 0
        n = self.n
        cells = 0
        adj: list[list[int]] = [[] for _ in range(n + 1)]
        for c, p in enumerate(self.parent):
            if p != c:
                adj[c].append(p)
                adj[p].append(c)
                cells += 2
        for u, v in self.pending:
            adj[u].append(v)
            adj[v].append(u)
            cells += 2

        old_parent = self.parent
        old_l, old_r = self._flag_l, self._flag_r
        parent = [-1] * (n + 1)
        flag_l = [False] * (n + 1)
        flag_r = [False] * (n + 1)
        for start in range(n + 1):
            if parent[start] != -1:
                continue
            # iterating starts in ascending order makes the BFS source the
            # smallest cut of its component, hence the deterministic root
            queue = [start]
            parent[start] = start
            any_l = any_r = False
            head = 0
            while head < len(queue):
                u = queue[head]
                head += 1
                cells += 1
                any_l = any_l or old_l[old_parent[u]]
                any_r = any_r or old_r[old_parent[u]]
                for v in adj[u]:
                    if parent[v] == -1:
                        parent[v] = start
                        queue.append(v)
            flag_l[start] = any_l
            flag_r[start] = any_r

        self.parent = parent
        self._flag_l = flag_l
        self._flag_r = flag_r
        self.pending = []
        return cells

    def flagged_cuts(self, side: Side) -> list[int]:
        """All cuts whose component carries the flag, ascending."""
        flags = self._flag_l if side == "L" else self._flag_r
        return [c for c in range(self.n + 1) if flags[self.parent[c]]]

    def components(self) -> list[list[int]]:
        """Current components as sorted cut lists (for tests and traces)."""
        groups: dict[int, list[int]] = {}
        for c in range(self.n + 1):
            groups.setdefault(self.parent[c], []).append(c)
        return [groups[r] for r in sorted(groups)]
