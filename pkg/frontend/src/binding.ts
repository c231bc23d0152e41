/**
 * The bound augmenter: batch in, augmented batch out.
 *
 * All random draws happen inside the engine; the binding only serializes
 * the batch to a SAUG1 file, invokes `stegaug augment`, and decodes the
 * result, so outputs are byte-identical to direct CLI use for equal seeds.
 * Transfer cost is one container write + read per call.
 */

import { mkdtempSync, readFileSync, rmSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";

import { runEngine } from "./engine.js";
import { decodeSaug, encodeSaug, SaugBatch } from "./saug.js";

export interface BoundBatch {
  /** n*c*h*w bytes, channel-planar (n, c, h, w) */
  images: Uint8Array;
  /** n*labelDim bytes of 0/1 */
  labels: Uint8Array;
  n: number;
  c: number;
  h: number;
  w: number;
  labelDim: number;
}

export interface AugmentOptions {
  /** application probability, default 0.5 */
  p?: number;
  /** 64-bit seed, default 0 */
  seed?: number | bigint;
  /** bit depths to draw uniformly from, default 1..7 */
  kChoices?: number[];
  /** engine worker threads (never changes output bytes) */
  threads?: number;
}

export interface AugmentationRecord {
  outputIndex: number;
  kind: "passthrough" | "steg";
  secretIndex?: number;
  k?: number;
}

export interface AugmentResult {
  images: Uint8Array;
  labels: Uint8Array;
  records: AugmentationRecord[];
}

function validate(batch: BoundBatch): void {
  const { images, labels, n, c, h, w, labelDim } = batch;
  for (const [name, value] of Object.entries({ n, c, h, w, labelDim })) {
    if (!Number.isInteger(value) || value < 1) {
      throw new Error(`dimension ${name} must be a positive integer, got ${value}`);
    }
  }
  if (!(images instanceof Uint8Array)) {
    throw new Error("images must be a Uint8Array (8-bit unsigned)");
  }
  if (!(labels instanceof Uint8Array)) {
    throw new Error("labels must be a Uint8Array (8-bit unsigned)");
  }
  if (images.length !== n * c * h * w) {
    throw new Error(
      `images length ${images.length} does not match n*c*h*w = ${n * c * h * w}`
    );
  }
  if (labels.length !== n * labelDim) {
    throw new Error(
      `labels length ${labels.length} does not match n*labelDim = ${n * labelDim}`
    );
  }
}

function parseRecords(csv: string): AugmentationRecord[] {
  const lines = csv.trim().split("\n");
  const records: AugmentationRecord[] = [];
  for (const line of lines.slice(1)) {
    const [idx, kind, secret, k] = line.split(",");
    if (kind === "steg") {
      records.push({
        outputIndex: Number(idx),
        kind,
        secretIndex: Number(secret),
        k: Number(k),
      });
    } else {
      records.push({ outputIndex: Number(idx), kind: "passthrough" });
    }
  }
  return records;
}

/**
 * Augment a batch through the engine.  Bit-identical to
 * `stegaug augment` on the same payload and seed.
 */
export function augmentBatch(batch: BoundBatch, opts: AugmentOptions = {}): AugmentResult {
  validate(batch);
  const saug: SaugBatch = {
    n: batch.n,
    h: batch.h,
    w: batch.w,
    c: batch.c,
    labelDim: batch.labelDim,
    images: batch.images,
    labels: batch.labels,
  };
  const dir = mkdtempSync(join(tmpdir(), "stegaug-"));
  try {
    const inPath = join(dir, "in.saug");
    const outPath = join(dir, "out.saug");
    const recPath = join(dir, "records.csv");
    writeFileSync(inPath, encodeSaug(saug));
    const args = [
      "augment", inPath,
      "--out", outPath,
      "--records", recPath,
      "--p", String(opts.p ?? 0.5),
      "--seed", String(opts.seed ?? 0),
    ];
    if (opts.kChoices !== undefined) {
      args.push("--k-choices", opts.kChoices.join(","));
    }
    if (opts.threads !== undefined) {
      args.push("--threads", String(opts.threads));
    }
    runEngine(args);
    const out = decodeSaug(readFileSync(outPath));
    const records = parseRecords(readFileSync(recPath, "utf-8"));
    return { images: out.images, labels: out.labels, records };
  } finally {
    rmSync(dir, { recursive: true, force: true });
  }
}
