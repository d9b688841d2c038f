"""Bundled graph6 catalogs (regenerate with scripts/build_catalogs.py)."""

from __future__ import annotations

from importlib import resources

from stardecomp.graph import Graph, parse_graph6, read_graph6_lines


def catalog_names() -> list[str]:
    root = resources.files("stardecomp") / "data"
    return sorted(p.name[:-3] for p in root.iterdir() if p.name.endswith(".g6"))


def catalog_lines(name: str) -> list[str]:
    text = (resources.files("stardecomp") / "data" / f"{name}.g6").read_text()
    return [line for _, line in read_graph6_lines(text.splitlines())]


def load_catalog(name: str) -> list[Graph]:
    """E.g. ``load_catalog("cubic_connected_8")`` or ``"bipartite_cubic_16"``."""
    return [parse_graph6(line) for line in catalog_lines(name)]
