#!/usr/bin/env python3
"""Convert per-class JSON image arrays into IDX (ubyte) image/label files.

Expected input layout: one JSON file per class, each containing either a
flat pixel list or {"data": [...]}. Pixels may be raw 8-bit values or
floats in [0,1] (stored as value/255 rounded to 3 decimals); both are
mapped back to exact 8-bit intensities.

This is how the bundled data/ files were produced, from the npm packages
"mnist" and "fashion-mnist" (which ship the classic LeCun MNIST and
Zalando FashionMNIST images):

  npm install mnist fashion-mnist
  python3 scripts/json_to_idx.py --src node_modules/mnist/src/digits \
      --out data/mnist --per-class 1001
  python3 scripts/json_to_idx.py --src node_modules/fashion-mnist/src/clothes \
      --out data/fashion --per-class 1200
"""

import argparse
import gzip
import json
import os
import struct


def load_class_file(path, side):
    with open(path) as f:
        raw = json.load(f)
    if isinstance(raw, dict):
        raw = raw["data"]
    pixels_per_image = side * side
    # Flat array or list of per-image lists.
    if raw and isinstance(raw[0], list):
        images = raw
    else:
        n = len(raw) // pixels_per_image
        images = [raw[i * pixels_per_image:(i + 1) * pixels_per_image] for i in range(n)]
    out = []
    for img in images:
        if not img:
            continue
        if len(img) != pixels_per_image:
            raise ValueError(f"{path}: image with {len(img)} pixels, expected {pixels_per_image}")
        mx = max(img)
        if mx <= 1.0:
            out.append(bytes(round(v * 255) for v in img))
        else:
            out.append(bytes(int(v) for v in img))
    return out


def write_gz(path, payload):
    # mtime=0 keeps the output byte-reproducible
    with open(path, "wb") as raw:
        with gzip.GzipFile(fileobj=raw, mode="wb", mtime=0) as f:
            f.write(payload)


def write_idx_images(path, images, side):
    payload = struct.pack(">IIII", 0x00000803, len(images), side, side)
    payload += b"".join(images)
    write_gz(path, payload)


def write_idx_labels(path, labels):
    payload = struct.pack(">II", 0x00000801, len(labels))
    payload += bytes(labels)
    write_gz(path, payload)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--src", required=True, help="directory with <class>.json files")
    ap.add_argument("--out", required=True, help="output directory")
    ap.add_argument("--per-class", type=int, default=0, help="cap images per class (0 = all)")
    ap.add_argument("--side", type=int, default=28)
    args = ap.parse_args()

    class_files = sorted(
        f for f in os.listdir(args.src) if f.endswith(".json") and f[:-5].isdigit()
    )
    if not class_files:
        raise SystemExit(f"no <class>.json files in {args.src}")

    images, labels = [], []
    for fname in class_files:
        cls = int(fname[:-5])
        imgs = load_class_file(os.path.join(args.src, fname), args.side)
        if args.per_class:
            imgs = imgs[: args.per_class]
        images.extend(imgs)
        labels.extend([cls] * len(imgs))
        print(f"class {cls}: {len(imgs)} images")

    os.makedirs(args.out, exist_ok=True)
    write_idx_images(os.path.join(args.out, "train-images-idx3-ubyte.gz"), images, args.side)
    write_idx_labels(os.path.join(args.out, "train-labels-idx1-ubyte.gz"), labels)
    print(f"wrote {len(images)} images to {args.out}")


if __name__ == "__main__":
    main()
