"""
Hasse diagram emitters (abstract base plus DOT, JSON and markdown)
All emitters produce byte-identical output for the same poset
"""

import json
from abc import ABC, abstractmethod
from pathlib import Path
from typing import ClassVar, Dict, Type, Union

from .poset import OperationPoset


class BaseEmitter(ABC):
    """Abstract base class for all Hasse diagram emitters"""

    suffix: ClassVar[str]

    @abstractmethod
    def emit(self, poset: OperationPoset) -> str:
        """Render the covering relation - must be implemented by subclass"""
        pass


class DotEmitter(BaseEmitter):
    """Graphviz digraph with the top elements drawn up"""

    suffix = ".dot"

    def __init__(self, name: str = "hasse"):
        self.name = name

    def emit(self, poset: OperationPoset) -> str:
        lines = [f"digraph {self.name} {{", "  rankdir=BT;", "  node [shape=plaintext];"]
        for index, label in enumerate(poset.labels):
            lines.append(f'  n{index} [label="{label}"];')
        for lower, upper in sorted(poset.hasse):
            lines.append(f"  n{lower} -> n{upper};")
        lines.append("}")
        return "\n".join(lines) + "\n"


class JsonEmitter(BaseEmitter):
    suffix = ".json"

    def emit(self, poset: OperationPoset) -> str:
        data = {"nodes": list(poset.labels), "covers": [[lower, upper] for lower, upper in sorted(poset.hasse)]}
        return json.dumps(data, indent=2) + "\n"


class MarkdownEmitter(BaseEmitter):
    """One table row per element with its upper covers"""

    suffix = ".md"

    def emit(self, poset: OperationPoset) -> str:
        lines = ["| # | element | covered by |", "|---|---|---|"]
        for index, label in enumerate(poset.labels):
            above = ", ".join(f"`{poset.labels[upper]}`" for upper in poset.upper_covers(index)) or "-"
            lines.append(f"| {index} | `{label}` | {above} |")
        return "\n".join(lines) + "\n"


EMITTERS: Dict[str, Type[BaseEmitter]] = {
    "dot": DotEmitter,
    "json": JsonEmitter,
    "md": MarkdownEmitter,
    "markdown": MarkdownEmitter,
}


def emit_hasse(poset: OperationPoset, fmt: str = "dot") -> str:
    try:
        emitter = EMITTERS[fmt]()
    except KeyError:
        raise ValueError(f"Unknown format {fmt!r}; choose from {', '.join(sorted(EMITTERS))}") from None
    return emitter.emit(poset)


def output_path(path: Union[str, Path], fmt: str = "dot") -> Path:
    """The path as given, or with the format's suffix when it has none"""
    path = Path(path)
    if path.suffix or fmt not in EMITTERS:
        return path
    return path.with_suffix(EMITTERS[fmt].suffix)
