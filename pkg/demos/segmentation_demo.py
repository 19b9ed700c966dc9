"""
MST-threshold image segmentation
================================

Build a small synthetic image, segment it with both solvers, and write
the label images plus their pixmap inputs to ./segmentation_output/.
"""

from pathlib import Path

import numpy as np

from bloomprim import PixelImage, save_labels, save_ppm, segment

out_dir = Path("segmentation_output")
out_dir.mkdir(exist_ok=True)

# A 96x96 test card: smooth vertical gradient, a bright disc, and a
# noisy textured band across the middle.
rng = np.random.Generator(np.random.PCG64(5))
yy, xx = np.mgrid[0:96, 0:96].astype(np.float64)
img = np.zeros((96, 96, 3))
img[:, :, 0] = 60 + yy / 96 * 120
img[:, :, 1] = 90 + xx / 96 * 80
img[:, :, 2] = 140
disc = ((xx - 30) ** 2 + (yy - 28) ** 2) < 15**2
img[disc] = (230, 210, 60)
band = (yy > 58) & (yy < 80)
img[band] += rng.normal(0, 9, size=img.shape)[band]
image = PixelImage(np.clip(img, 0, 255).astype(np.uint8))
save_ppm(image, out_dir / "input.ppm")

# Pixels become nodes, 8-neighbour pairs become edges weighted by the
# squared RGB distance.  Edges heavier than the threshold are trimmed
# from the MST and the remaining components become labels.
for solver in ("baseline", "bloom"):
    result = segment(image, threshold=100.0, solver=solver, hash_seed=5)
    image_path, sidecar = save_labels(result, out_dir / f"labels_{solver}.ppm")
    print(f"{solver:8}: {result.cluster_count:4d} clusters -> {image_path}")

print(f"outputs in {out_dir}/")
