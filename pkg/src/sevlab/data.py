"""Small transcribed datasets: triangulations, symmetry generators and
weight/vertex dictionaries."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .errors import UnknownDataset
from .exact import Permutation
from .simplicial import SimplicialComplex

RP2_LABELS = ["11", "12", "13", "22", "23", "33"]

_RP2_FACETS = [
    "(11)(12)(13)", "(11)(22)(13)", "(11)(22)(23)", "(11)(12)(33)", "(12)(22)(23)",
    "(12)(23)(13)", "(12)(22)(33)", "(11)(23)(33)", "(13)(22)(33)", "(13)(23)(33)",
]

# column-major reading of the 12 x 3 facet table
_CP2_FACETS = """
12456 23456 13456 12459 23567 13468 23469 13457 12568 13569 12467 23458
45789 56789 46789 34578 15689 24679 35679 14678 24589 34689 14579 25678
12378 12389 12379 12678 23489 13579 13689 12479 23578 23679 13478 12589
""".split()

CP2_DICTIONARY = {1: "23", 2: "32", 3: "11", 4: "21", 5: "33", 6: "12", 7: "22", 8: "31", 9: "13"}

CP2_GENERATORS = {"h1": "(147)(258)(369)", "h2": "(123)(456)(789)", "tau": "(12)(46)(89)"}

HP2_GENERATORS = {"p": "(1)(23456)", "r1": "(1)(2)(36)(45)", "s": "(156)(243)", "r2": "(4)(5)(36)(12)"}

HP2_PAIR_TABLE = {
    "45": 1, "56": 2, "26": 3, "23": 4, "34": 5,
    "36": 6, "24": 7, "35": 8, "46": 9, "25": 10,
    "12": 11, "13": 12, "14": 13, "15": 14, "16": 15,
}

HP2_M1 = ["12", "13", "14", "15", "16", "23", "24", "25", "26"]

# face numbers f_0..f_{2a} of the tight triangulations, by algebra
FACE_TABLE = {
    "R": [6, 15, 10],
    "C": [9, 36, 84, 90, 36],
    "H": [15, 105, 455, 1365, 3003, 4515, 4230, 2205, 490],
    "O": [27, 351, 2925, 17550, 80730, 296010, 888030, 2220075, 4686825, 8335899,
          12184614, 14074164, 12301200, 7757100, 3309696, 853281, 100386],
}

# face numbers f_0..f_{2a-1} of a vertex link
LINK_TABLE = {
    "R": [5, 5],
    "C": [8, 28, 40, 20],
    "H": [14, 91, 364, 1001, 1806, 1974, 1176, 294],
    "O": [26, 325, 2600, 14950, 65780, 230230, 657800, 1562275, 3087370, 4964102,
          6255184, 5922800, 4022200, 1838720, 505648, 63206],
}


@dataclass
class Dataset:
    name: str
    provenance: str
    complex: Optional[SimplicialComplex] = None
    generators: Dict[str, Permutation] = field(default_factory=dict)
    dictionary: Dict = field(default_factory=dict)
    members: List = field(default_factory=list)

    def payload(self) -> dict:
        out = {"name": self.name, "provenance": self.provenance}
        if self.complex is not None:
            out["n_vertices"] = self.complex.n_vertices
            out["facets"] = [list(f) for f in self.complex.facets]
        if self.generators:
            out["generators"] = {k: list(g.images) for k, g in self.generators.items()}
        if self.dictionary:
            out["dictionary"] = {str(k): v for k, v in self.dictionary.items()}
        if self.members:
            out["members"] = list(self.members)
        return out

    def to_json(self) -> str:
        return json.dumps(self.payload(), sort_keys=True)

    def digest(self) -> str:
        return hashlib.sha256(self.to_json().encode()).hexdigest()


def _labels_to_facet(word: str, labels: List[str]) -> List[int]:
    parts = word.strip("()").split(")(")
    return [labels.index(p) + 1 for p in parts]


def _build(name: str) -> Dataset:
    if name == "RP2_min":
        c = SimplicialComplex(6, [_labels_to_facet(w, RP2_LABELS) for w in _RP2_FACETS])
        d = {i + 1: lab for i, lab in enumerate(RP2_LABELS)}
        return Dataset(name, "six-vertex RP2 from the bold terms of the L^3 weight diagram", complex=c, dictionary=d)
    if name == "CP2_min":
        c = SimplicialComplex(9, [[int(ch) for ch in w] for w in _CP2_FACETS])
        return Dataset(name, "nine-vertex CP2, 36 maximal faces", complex=c)
    if name == "CP2_dictionary":
        return Dataset(name, "CP2 vertex to A(x)B weight (ij)", dictionary=dict(CP2_DICTIONARY))
    if name == "CP2_generators":
        g = {k: Permutation.from_cycles(v, 9) for k, v in CP2_GENERATORS.items()}
        return Dataset(name, "Z3 x Z3 subgroup H and the involution tau", generators=g)
    if name == "HP2_generators":
        g = {k: Permutation.from_cycles(v, 6) for k, v in HP2_GENERATORS.items()}
        return Dataset(name, "A5 generators on six letters", generators=g)
    if name == "HP2_pair_table":
        return Dataset(name, "pairs ij of 1..6 to vertices 1..15", dictionary=dict(HP2_PAIR_TABLE))
    if name == "HP2_M1":
        return Dataset(name, "maximal simplex M1 as nine pairs", members=list(HP2_M1))
    raise UnknownDataset(name)


DATASET_NAMES = ("RP2_min", "CP2_min", "CP2_dictionary", "CP2_generators", "HP2_generators", "HP2_pair_table", "HP2_M1")


def dataset(name: str) -> Dataset:
    return _build(name)


def pair_permutation(p: Permutation, table: Dict[str, int] = HP2_PAIR_TABLE) -> Permutation:
    """Induced action of a permutation of 1..6 on the 15 numbered pairs."""
    img = [0] * len(table)
    for pair, v in table.items():
        i, j = sorted((p(int(pair[0])), p(int(pair[1]))))
        img[v - 1] = table[f"{i}{j}"]
    return Permutation(img)


def m1_vertices() -> List[int]:
    return sorted(HP2_PAIR_TABLE[x] for x in HP2_M1)
