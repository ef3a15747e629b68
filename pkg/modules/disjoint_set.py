"""Union-find over the integers 0..count-1"""
from typing import Dict, List


class DisjointSet:
    """Disjoint-set forest with union by rank and path halving."""

    def __init__(self, count: int) -> None:
        self.parent = list(range(count))
        self.rank = [0] * count
        self.groups = count

    def __len__(self) -> int:
        return len(self.parent)

    def find(self, element: int) -> int:
        parent = self.parent
        while parent[element] != element:
            parent[element] = parent[parent[element]]
            element = parent[element]
        return element

    def unite(self, first: int, second: int) -> bool:
        """
        Merge the sets containing two elements.

        Returns:
            False if both were already in the same set
        """
        rep_first = self.find(first)
        rep_second = self.find(second)
        if rep_first == rep_second:
            return False

        if self.rank[rep_first] < self.rank[rep_second]:
            rep_first, rep_second = rep_second, rep_first
        self.parent[rep_second] = rep_first
        if self.rank[rep_first] == self.rank[rep_second]:
            self.rank[rep_first] += 1
        self.groups -= 1
        return True

    def same(self, first: int, second: int) -> bool:
        return self.find(first) == self.find(second)

    def labels(self) -> List[int]:
        """Class label per element, numbered by first occurrence."""
        seen: Dict[int, int] = {}
        out = []
        for element in range(len(self.parent)):
            root = self.find(element)
            if root not in seen:
                seen[root] = len(seen)
            out.append(seen[root])
        return out

    def to_list(self) -> List[List[int]]:
        groups: Dict[int, List[int]] = {}
        for element in range(len(self.parent)):
            groups.setdefault(self.find(element), []).append(element)
        return list(groups.values())
