import { spawnSync } from "node:child_process";
import { mkdtempSync } from "node:fs";
import { tmpdir } from "node:os";
import { dirname, join, resolve } from "node:path";
import { fileURLToPath } from "node:url";

export const REPO_ROOT = resolve(dirname(fileURLToPath(import.meta.url)), "..", "..");

export function tempDir(prefix: string): string {
  return mkdtempSync(join(tmpdir(), prefix));
}

/** Generate a deterministic CIFAR-10-format batch file via the shared tool. */
export function genCifarFixture(records: number, seed: number, outPath: string): void {
  const proc = spawnSync(
    process.env.STEGAUG_PYTHON ?? "python3",
    [join(REPO_ROOT, "tools", "gen_cifar_fixture.py"), String(records), String(seed), outPath],
    { encoding: "utf-8" }
  );
  if (proc.status !== 0) {
    throw new Error(`fixture generation failed: ${proc.stderr}`);
  }
}

/** Minimal binary P6 PPM encode for parity tests against the engine CLI. */
export function encodePpm(image: Uint8Array, h: number, w: number): Buffer {
  const header = Buffer.from(`P6\n${w} ${h}\n255\n`, "ascii");
  const raster = Buffer.alloc(h * w * 3);
  // channel-planar (3, h, w) -> interleaved rows
  for (let y = 0; y < h; y++) {
    for (let x = 0; x < w; x++) {
      for (let ch = 0; ch < 3; ch++) {
        raster[(y * w + x) * 3 + ch] = image[(ch * h + y) * w + x];
      }
    }
  }
  return Buffer.concat([header, raster]);
}

export function decodePpm(data: Buffer): { image: Uint8Array; h: number; w: number } {
  const text = data.subarray(0, 64).toString("latin1");
  const match = text.match(/^P6\n(\d+) (\d+)\n255\n/);
  if (!match) throw new Error("unsupported PPM layout in test helper");
  const w = Number(match[1]);
  const h = Number(match[2]);
  const raster = data.subarray(match[0].length);
  const image = new Uint8Array(3 * h * w);
  for (let y = 0; y < h; y++) {
    for (let x = 0; x < w; x++) {
      for (let ch = 0; ch < 3; ch++) {
        image[(ch * h + y) * w + x] = raster[(y * w + x) * 3 + ch];
      }
    }
  }
  return { image, h, w };
}
