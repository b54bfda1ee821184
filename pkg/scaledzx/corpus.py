"""
Seeded random diagrams for cross-checking the normal forms against the matrix semantics.

The seed comes from `ZX_SEED`, else the `[zx] seed` config value, so a failing corpus member
can be reproduced exactly.
"""
import logging
from typing import Callable, List, Optional

from numpy.random import Generator, default_rng

from scaledzx.core import tensor, tensor_all
from scaledzx.helpers.utils import get_seed
from scaledzx.models.Diagram import Diagram, DiagramBuilder
from scaledzx.models.VertexKind import VertexKind
from scaledzx.patterns import pair, star, x_scalar, z_scalar

logger = logging.getLogger(__name__)

MAX_SCALAR_PARTS = 12
MAX_BOUNDARY = 3
MAX_VERTICES = 10


def zero_scalars() -> List[Diagram]:
    """
    The four zero scalars: X(π), Z(π), pair(π/2,−π/2) and pair(−π/2,π/2).
    """
    return [x_scalar(2), z_scalar(2), pair(1, 3), pair(3, 1)]


def _phase(rng: Generator) -> int:
    return int(rng.integers(0, 4))


def random_scalar(rng: Generator, max_parts: int = MAX_SCALAR_PARTS) -> Diagram:
    """
    A tensor of up to `max_parts` stars, phased Z/X scalar nodes and phased pairs.
    """
    parts = []
    for _ in range(int(rng.integers(1, max_parts + 1))):
        match int(rng.integers(0, 4)):
            case 0:
                parts.append(star())
            case 1:
                parts.append(z_scalar(_phase(rng)))
            case 2:
                parts.append(x_scalar(_phase(rng)))
            case _:
                parts.append(pair(_phase(rng), _phase(rng)))
    return tensor_all(parts)


def random_stabilizer(
    rng: Generator,
    max_boundary: int = MAX_BOUNDARY,
    max_vertices: int = MAX_VERTICES,
) -> Diagram:
    """
    A random stabilizer diagram with at most `max_boundary` wires and `max_vertices` vertices.
    Spiders are wired at random (parallel edges and self-loops included), some edges carry a
    Hadamard, every boundary point lands on a spider and a star may be added.
    """
    builder = DiagramBuilder()
    n_in = int(rng.integers(0, max_boundary + 1))
    n_out = int(rng.integers(0, max_boundary - n_in + 1))
    budget = max(1, max_vertices - int(rng.integers(0, 2)))
    n_spiders = int(rng.integers(1, max(1, budget // 2) + 1))
    spiders = [
        builder.add_vertex(VertexKind(str(rng.choice(["Z", "X"])), _phase(rng)))
        for _ in range(n_spiders)
    ]
    used = n_spiders
    for _ in range(int(rng.integers(0, 2 * n_spiders + 1))):
        u, v = (spiders[int(i)] for i in rng.integers(0, n_spiders, size=2))
        if u != v and used < budget and rng.random() < 0.4:
            h = builder.add_vertex(VertexKind.hadamard())
            builder.add_edge(u, h)
            builder.add_edge(h, v)
            used += 1
        else:
            builder.add_edge(u, v)
    for _ in range(n_in):
        builder.add_edge(builder.add_input(), spiders[int(rng.integers(0, n_spiders))])
    for _ in range(n_out):
        builder.add_edge(spiders[int(rng.integers(0, n_spiders))], builder.add_output())
    if used < max_vertices and rng.random() < 0.3:
        builder.add_vertex(VertexKind.star())
    return builder.build()


def random_zero(rng: Generator, **kwargs) -> Diagram:
    """
    A random stabilizer diagram tensored with one of the zero scalars.
    """
    marker = zero_scalars()[int(rng.integers(0, 4))]
    return tensor(random_stabilizer(rng, **kwargs), marker)


def corpus(
    generator: Callable[..., Diagram],
    size: int,
    seed: Optional[int] = None,
    **kwargs,
) -> List[Diagram]:
    """
    `size` diagrams from `generator`, seeded by `seed` or `get_seed()`.
    """
    seed = get_seed() if seed is None else seed
    rng = default_rng(seed)
    logger.debug(f"Generating {size} diagrams with {generator.__name__} (seed {seed})")
    return [generator(rng, **kwargs) for _ in range(size)]


def scalar_corpus(size: int, seed: Optional[int] = None, **kwargs) -> List[Diagram]:
    return corpus(random_scalar, size, seed, **kwargs)


def stabilizer_corpus(size: int, seed: Optional[int] = None, **kwargs) -> List[Diagram]:
    return corpus(random_stabilizer, size, seed, **kwargs)


def zero_corpus(size: int, seed: Optional[int] = None, **kwargs) -> List[Diagram]:
    return corpus(random_zero, size, seed, **kwargs)
