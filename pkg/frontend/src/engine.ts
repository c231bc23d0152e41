/**
 * Locating and invoking the stegaug engine CLI.
 *
 * The binding talks to the engine exclusively through its documented
 * external interfaces: CLI subcommands and the SAUG1/PPM file formats.
 * Override the interpreter with STEGAUG_PYTHON (defaults to python3).
 */

import { spawnSync } from "node:child_process";

export interface EngineResult {
  stdout: string;
  stderr: string;
}

function interpreter(): string {
  return process.env.STEGAUG_PYTHON ?? "python3";
}

/** Run an engine subcommand; throws with stderr attached on non-zero exit. */
export function runEngine(args: string[]): EngineResult {
  const proc = spawnSync(interpreter(), ["-m", "stegaug", ...args], {
    encoding: "utf-8",
    maxBuffer: 1 << 28,
  });
  if (proc.error) {
    throw new Error(`failed to launch engine: ${proc.error.message}`);
  }
  if (proc.status !== 0) {
    throw new Error(
      `engine exited with status ${proc.status}: ${proc.stderr.trim()}`
    );
  }
  return { stdout: proc.stdout, stderr: proc.stderr };
}

/** Engine version string, e.g. "0.1.0". */
export function engineVersion(): string {
  const { stdout } = runEngine(["--version"]);
  const match = stdout.trim().match(/(\d+\.\d+\.\d+)/);
  if (!match) {
    throw new Error(`unparseable engine version output: ${stdout.trim()}`);
  }
  return match[1];
}
