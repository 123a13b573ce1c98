/**
 * Small public handwritten-digits dataset (1797 samples, 64 gray-scale
 * features in 0..16, 10 classes), bundled as CSV: 64 feature columns
 * followed by the label. Features are scaled to [0, 1]; the train/test
 * split is a fixed seeded shuffle so every run sees the same partition.
 */

import * as fs from "node:fs";
import * as path from "node:path";

import { SplitMix64 } from "./rng";

export interface Dataset {
  name: string;
  inputSize: number;
  classCount: number;
  trainX: Float64Array[];
  trainY: Int32Array;
  testX: Float64Array[];
  testY: Int32Array;
}

const DATA_DIR = path.join(__dirname, "..", "..", "data");
const SPLIT_SEED = 0xd1617;
const TEST_FRACTION = 0.2;

export function loadDataset(name: string): Dataset {
  if (name !== "digits") {
    throw new Error(`unknown dataset ${name}; available: digits`);
  }
  const file = path.join(DATA_DIR, "digits.csv");
  let text: string;
  try {
    text = fs.readFileSync(file, "utf8");
  } catch (err) {
    throw new Error(
      `failed to read dataset at ${file}: ${String(err)}. ` +
        "Regenerate it with scripts/export-digits.py and retry."
    );
  }
  const xs: Float64Array[] = [];
  const ys: number[] = [];
  for (const line of text.split("\n")) {
    if (!line.trim()) continue;
    const parts = line.split(",").map(Number);
    if (parts.length !== 65 || parts.some(Number.isNaN)) {
      throw new Error(`malformed dataset row: ${line.slice(0, 40)}`);
    }
    const x = new Float64Array(64);
    for (let i = 0; i < 64; i++) x[i] = parts[i] / 16;
    xs.push(x);
    ys.push(parts[64]);
  }

  const order = xs.map((_, i) => i);
  new SplitMix64(SPLIT_SEED).shuffle(order);
  const testCount = Math.floor(xs.length * TEST_FRACTION);
  const testIdx = order.slice(0, testCount);
  const trainIdx = order.slice(testCount);
  return {
    name,
    inputSize: 64,
    classCount: 10,
    trainX: trainIdx.map((i) => xs[i]),
    trainY: Int32Array.from(trainIdx.map((i) => ys[i])),
    testX: testIdx.map((i) => xs[i]),
    testY: Int32Array.from(testIdx.map((i) => ys[i])),
  };
}
