from __future__ import annotations

import numpy as np
import pytest

from bloomprim import Graph, PixelImage


def make_triangle() -> Graph:
    # 0-1 (w=1, id 0), 1-2 (w=2, id 1), 0-2 (w=3, id 2); MST = {0, 1}, cost 3
    return Graph(3, [0, 1, 0], [1, 2, 2], [1.0, 2.0, 3.0])


def make_path() -> Graph:
    # 0-1-2, both weight 1
    return Graph(3, [0, 1], [1, 2], [1.0, 1.0])


@pytest.fixture
def triangle() -> Graph:
    return make_triangle()


@pytest.fixture
def path_graph() -> Graph:
    return make_path()


def make_natural_image(seed: int, width: int = 128, height: int = 128) -> PixelImage:
    """Synthetic natural-style test image.

    Directional gradient background, a handful of soft colored blobs,
    and fine texture whose amplitude varies smoothly across the frame,
    so the result mixes flat regions with strongly textured ones.
    """
    rng = np.random.Generator(np.random.PCG64(seed))
    yy, xx = np.mgrid[0:height, 0:width].astype(np.float64)
    img = np.zeros((height, width, 3))
    for c in range(3):
        gx, gy = rng.uniform(-1, 1, 2)
        base = rng.uniform(60, 190)
        amp = rng.uniform(20, 60)
        img[:, :, c] = base + amp * (gx * xx / width + gy * yy / height)
    for _ in range(int(rng.integers(3, 7))):
        cx, cy = rng.uniform(0, width), rng.uniform(0, height)
        rx, ry = rng.uniform(8, 30, size=2)
        color = rng.uniform(0, 255, size=3)
        mask = np.exp(-(((xx - cx) / rx) ** 2 + ((yy - cy) / ry) ** 2))
        img += mask[:, :, None] * (color[None, None, :] - img) * 0.8
    field = np.zeros((height, width))
    for _ in range(4):
        cx, cy = rng.uniform(0, width), rng.uniform(0, height)
        rx, ry = rng.uniform(20, 60, size=2)
        field += np.exp(-(((xx - cx) / rx) ** 2 + ((yy - cy) / ry) ** 2))
    field = np.clip(field, 0, 1)
    img += (1.0 + 6.0 * field)[:, :, None] * rng.normal(0.0, 1.0, size=img.shape)
    return PixelImage(np.clip(img, 0, 255).astype(np.uint8))


@pytest.fixture(scope="session")
def natural_images() -> list[PixelImage]:
    return [make_natural_image(seed) for seed in range(1, 6)]
