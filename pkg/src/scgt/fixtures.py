"""Named complexes used by the CLI, the verifier and the tests."""

from scgt.complex import SimplicialComplex, path_complex, uniform_matroid

PROTOTYPE_LABELS = ("F", "S", "FB", "TV", "E", "G")

# The feasible coalitions of the six-channel marketing example, as listed
# (20 sets; the singleton {G} is implied by downward closure).
PROTOTYPE_LISTING = (
    (),
    ("F",),
    ("S",),
    ("FB",),
    ("E",),
    ("TV",),
    ("S", "F"),
    ("FB", "F"),
    ("FB", "S"),
    ("FB", "S", "F"),
    ("FB", "E"),
    ("FB", "TV"),
    ("TV", "E"),
    ("FB", "TV", "E"),
    ("FB", "G"),
    ("TV", "G"),
    ("FB", "TV", "G"),
    ("E", "G"),
    ("FB", "E", "G"),
    ("TV", "E", "G"),
)

# "every subset of {FB, S, F} and every subset of {FB, TV, E, G}"
PROTOTYPE_VARIANT_TRACKABLE = (("FB", "S", "F"), ("FB", "TV", "E", "G"))


def _ids(names):
    return [PROTOTYPE_LABELS.index(x) + 1 for x in names]


def prototype(variant=False):
    sets = PROTOTYPE_VARIANT_TRACKABLE if variant else PROTOTYPE_LISTING
    return SimplicialComplex.from_facets(6, [_ids(s) for s in sets], PROTOTYPE_LABELS)


def figure_3a():
    """Three triangles {1,2,3}, {2,3,5}, {3,4,5} sharing vertex 3."""
    return SimplicialComplex.from_facets(5, [(1, 2, 3), (2, 3, 5), (3, 4, 5)])


def figure_3b():
    """Two triangles {1,2,3}, {3,4,5} glued at vertex 3."""
    return SimplicialComplex.from_facets(5, [(1, 2, 3), (3, 4, 5)])


def triangle_graphic_matroid():
    """Graphic matroid of the triangle graph; ground set = edges 12, 13, 23 as 1, 2, 3."""
    edges = {1: (1, 2), 2: (1, 3), 3: (2, 3)}
    bases = []
    for a in edges:
        for b in edges:
            if a < b:
                vs = set(edges[a]) | set(edges[b])
                if len(vs) == 3:  # two distinct edges of a triangle never close a cycle
                    bases.append((a, b))
    return SimplicialComplex.from_facets(3, bases)


FIXTURES = {
    "prototype": prototype,
    "prototype-variant": lambda: prototype(variant=True),
    "figure-3a": figure_3a,
    "figure-3b": figure_3b,
    "u12": lambda: uniform_matroid(1, 2),
    "u23": lambda: uniform_matroid(2, 3),
    "u24": lambda: uniform_matroid(2, 4),
    "triangle-graphic": triangle_graphic_matroid,
    "path4": lambda: path_complex(4),
    "path5": lambda: path_complex(5),
    "simplex3": lambda: SimplicialComplex.full_simplex(3),
}


def get_fixture(name):
    try:
        return FIXTURES[name]()
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; choose from {sorted(FIXTURES)}") from None
