/**
 * Training dataloader composing horizontal flips with the steganographic
 * augmenter, the combination that pairs a geometric transform with the
 * engine's implicit color-style perturbation.
 *
 * Determinism: one script-side SplitMix stream (seeded by `seed`) drives
 * the epoch shuffle and the per-image flip decisions; the augmentation
 * itself runs in the engine under seed + epoch.  A fixed seed therefore
 * reproduces identical batches across process runs.
 */

import { augmentBatch, AugmentResult } from "./binding.js";
import { CIFAR_CLASSES, readCifarFile } from "./cifar.js";
import { SplitMixStream } from "./rng.js";

export interface LoaderOptions {
  batchSize: number;
  seed?: number;
  /** steg application probability, default 0.5 */
  p?: number;
  /** flip probability, default 0.5 */
  flipP?: number;
  kChoices?: number[];
}

export interface LoaderBatch extends AugmentResult {
  n: number;
  c: number;
  h: number;
  w: number;
  labelDim: number;
}

/** Flip one channel-planar (c, h, w) image in place, left-right. */
export function hflip(image: Uint8Array, c: number, h: number, w: number): void {
  for (let ch = 0; ch < c; ch++) {
    for (let y = 0; y < h; y++) {
      const row = (ch * h + y) * w;
      for (let x = 0; x < w >> 1; x++) {
        const a = row + x;
        const b = row + w - 1 - x;
        const t = image[a];
        image[a] = image[b];
        image[b] = t;
      }
    }
  }
}

export class CifarLoader {
  private readonly images: Uint8Array;
  private readonly labels: Uint8Array;
  readonly n: number;
  readonly c = 3;
  readonly h = 32;
  readonly w = 32;
  readonly labelDim = CIFAR_CLASSES;
  private readonly opts: Required<LoaderOptions>;

  constructor(paths: string[], opts: LoaderOptions) {
    if (paths.length === 0) {
      throw new Error("CifarLoader needs at least one batch file");
    }
    const parts = paths.map(readCifarFile);
    this.n = parts.reduce((acc, p) => acc + p.n, 0);
    this.images = new Uint8Array(this.n * 3072);
    this.labels = new Uint8Array(this.n * CIFAR_CLASSES);
    let offset = 0;
    for (const part of parts) {
      this.images.set(part.images, offset * 3072);
      this.labels.set(part.labels, offset * CIFAR_CLASSES);
      offset += part.n;
    }
    this.opts = {
      batchSize: opts.batchSize,
      seed: opts.seed ?? 0,
      p: opts.p ?? 0.5,
      flipP: opts.flipP ?? 0.5,
      kChoices: opts.kChoices ?? [1, 2, 3, 4, 5, 6, 7],
    };
    if (this.opts.batchSize < 2) {
      throw new Error("batchSize must be >= 2 so every sample has a partner");
    }
  }

  /** Full batches per epoch (the trailing partial batch is dropped). */
  get batchesPerEpoch(): number {
    return Math.floor(this.n / this.opts.batchSize);
  }

  /** Iterate one epoch: shuffle, flip, then steg-augment every batch. */
  *epoch(epochIndex = 0): Generator<LoaderBatch> {
    const { batchSize, seed, p, flipP, kChoices } = this.opts;
    // stream 2e drives shuffle + flips, stream 2e+1 yields per-batch engine seeds
    const stream = new SplitMixStream(seed, 2 * epochIndex);
    const seedStream = new SplitMixStream(seed, 2 * epochIndex + 1);
    const order = new Uint32Array(this.n);
    for (let i = 0; i < this.n; i++) order[i] = i;
    for (let i = this.n - 1; i > 0; i--) {
      const j = stream.randBelow(i + 1);
      const t = order[i];
      order[i] = order[j];
      order[j] = t;
    }

    const imageBytes = this.c * this.h * this.w;
    for (let b = 0; b < this.batchesPerEpoch; b++) {
      const images = new Uint8Array(batchSize * imageBytes);
      const labels = new Uint8Array(batchSize * this.labelDim);
      for (let s = 0; s < batchSize; s++) {
        const src = order[b * batchSize + s];
        images.set(
          this.images.subarray(src * imageBytes, (src + 1) * imageBytes),
          s * imageBytes
        );
        labels.set(
          this.labels.subarray(src * this.labelDim, (src + 1) * this.labelDim),
          s * this.labelDim
        );
        if (stream.uniform() < flipP) {
          hflip(images.subarray(s * imageBytes, (s + 1) * imageBytes), this.c, this.h, this.w);
        }
      }
      const result = augmentBatch(
        { images, labels, n: batchSize, c: this.c, h: this.h, w: this.w, labelDim: this.labelDim },
        { p, seed: seedStream.nextU64(), kChoices }
      );
      yield {
        ...result,
        n: batchSize,
        c: this.c,
        h: this.h,
        w: this.w,
        labelDim: this.labelDim,
      };
    }
  }
}
