/**
 * Example: a flip + steganography training dataloader over CIFAR-10 files.
 *
 * Yields multi-hot-labelled batches ready for any binary-cross-entropy
 * trainer.  Usage:
 *
 *   node dist/examples/train_loader.js data_batch_1.bin [more.bin ...] \
 *        [--seed N] [--batch-size N] [--digest]
 *
 * --digest prints only a SHA-256 over the first batch (images + labels),
 * which two runs with the same seed must reproduce exactly.
 */

import { createHash } from "node:crypto";

import { CifarLoader } from "../src/dataloader.js";

function main(): number {
  const args = process.argv.slice(2);
  const paths: string[] = [];
  let seed = 0;
  let batchSize = 500;
  let digestOnly = false;
  for (let i = 0; i < args.length; i++) {
    if (args[i] === "--seed") seed = Number(args[++i]);
    else if (args[i] === "--batch-size") batchSize = Number(args[++i]);
    else if (args[i] === "--digest") digestOnly = true;
    else paths.push(args[i]);
  }
  if (paths.length === 0) {
    console.error("no CIFAR-10 batch files given; pass data_batch_*.bin paths");
    return 2;
  }

  let loader: CifarLoader;
  try {
    loader = new CifarLoader(paths, { batchSize, seed });
  } catch (err) {
    console.error(`failed to open dataset: ${(err as Error).message}`);
    return 1;
  }

  if (digestOnly) {
    const first = loader.epoch(0).next().value!;
    const hash = createHash("sha256");
    hash.update(first.images);
    hash.update(first.labels);
    console.log(hash.digest("hex"));
    return 0;
  }

  console.log(
    `${loader.n} samples, batch size ${batchSize} -> ` +
    `${loader.batchesPerEpoch} batches/epoch`
  );
  let stegCount = 0;
  let multiLabel = 0;
  let batches = 0;
  for (const batch of loader.epoch(0)) {
    batches++;
    stegCount += batch.records.filter((r) => r.kind === "steg").length;
    for (let s = 0; s < batch.n; s++) {
      let ones = 0;
      for (let j = 0; j < batch.labelDim; j++) ones += batch.labels[s * batch.labelDim + j];
      if (ones === 2) multiLabel++;
      if (ones < 1 || ones > 2) throw new Error(`label with ${ones} classes`);
    }
    if (batches <= 3) {
      console.log(
        `batch ${batches}: ${batch.records.filter((r) => r.kind === "steg").length}` +
        `/${batch.n} steg composites`
      );
    }
  }
  console.log(
    `epoch done: ${batches} batches, ${stegCount} steg samples, ` +
    `${multiLabel} multi-label vectors`
  );
  return 0;
}

process.exit(main());
