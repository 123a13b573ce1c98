/**
 * Training harness: load a chain of exported mask files, train masked
 * MLPs on the bundled digits dataset, and tabulate topology families
 * side by side (mean best test accuracy and absolute differences).
 */

import * as fs from "node:fs";
import * as path from "node:path";

import { Dataset, loadDataset } from "./dataset";
import { MaskFile, parseMaskFile } from "./maskfile";
import { Mlp } from "./mlp";
import { SplitMix64, deriveSeed } from "./rng";

export interface RunConfig {
  maskDir: string;
  dataset: string;
  epochs: number;
  batchSize: number;
  learningRate: number;
  seed: number;
  repetitions: number;
}

export interface MetricsTable {
  repetition: number;
  epochLosses: number[];
  testAccuracies: number[];
  bestAccuracy: number;
}

export interface SummaryRow {
  label: string;
  meanBestAccuracy: number;
  /** |mean best - first label's mean best|, zero for the first label */
  diffVsFirst: number;
}

export class ConfigurationError extends Error {}

/** Load every mask file in a directory (sorted by name) as a shape chain. */
export function loadMasks(maskDir: string): MaskFile[] {
  let names: string[];
  try {
    names = fs.readdirSync(maskDir).filter((n) => n.endsWith(".srnm"));
  } catch (err) {
    throw new ConfigurationError(`cannot read mask directory ${maskDir}: ${String(err)}`);
  }
  names.sort();
  if (names.length === 0) {
    throw new ConfigurationError(`no .srnm mask files in ${maskDir}`);
  }
  const masks = names.map((name) =>
    parseMaskFile(fs.readFileSync(path.join(maskDir, name)))
  );
  for (let i = 1; i < masks.length; i++) {
    if (masks[i - 1].cols !== masks[i].rows) {
      throw new ConfigurationError(
        `shape chain breaks between mask ${i - 1} (${masks[i - 1].rows}x` +
          `${masks[i - 1].cols}) and mask ${i} (${masks[i].rows}x${masks[i].cols})`
      );
    }
  }
  return masks;
}

function buildModel(masks: MaskFile[], dataset: Dataset, rng: SplitMix64): Mlp {
  if (masks[0].rows !== dataset.inputSize) {
    throw new ConfigurationError(
      `first mask has ${masks[0].rows} rows but the dataset has ` +
        `${dataset.inputSize} inputs`
    );
  }
  const widths = [masks[0].rows, ...masks.map((m) => m.cols)];
  const layerMasks: (Uint8Array | null)[] = masks.map((m) => m.bits);
  if (widths[widths.length - 1] !== dataset.classCount) {
    // append a dense classifier head when the chain does not end at the
    // class count (mask construction favors power-of-two widths)
    widths.push(dataset.classCount);
    layerMasks.push(null);
  }
  return new Mlp(widths, layerMasks, rng);
}

function evaluate(model: Mlp, dataset: Dataset): number {
  let hits = 0;
  for (let i = 0; i < dataset.testX.length; i++) {
    if (model.predict(dataset.testX[i]) === dataset.testY[i]) hits++;
  }
  return (100 * hits) / dataset.testX.length;
}

export interface TrainResult {
  metrics: MetricsTable[];
  /** parameter snapshot of the final repetition, for exactness checks */
  finalSnapshot: Float64Array;
  nonZeroWeights: number;
}

export function trainMaskedMlp(config: RunConfig, masks: MaskFile[]): TrainResult {
  return runTraining(config, (dataset, rng) => buildModel(masks, dataset, rng));
}

/** Same training loop with plain dense layers; the masked/unmasked reference point. */
export function trainUnmasked(config: RunConfig, widths: number[]): TrainResult {
  return runTraining(config, (dataset, rng) => {
    if (widths[0] !== dataset.inputSize || widths[widths.length - 1] !== dataset.classCount) {
      throw new ConfigurationError(
        `widths ${widths.join("-")} do not match the dataset shape ` +
          `${dataset.inputSize}->${dataset.classCount}`
      );
    }
    return new Mlp(widths, widths.slice(1).map(() => null), rng);
  });
}

function runTraining(
  config: RunConfig,
  makeModel: (dataset: Dataset, rng: SplitMix64) => Mlp
): TrainResult {
  if (config.repetitions < 1) {
    throw new ConfigurationError("repetitions must be at least 1");
  }
  const dataset = loadDataset(config.dataset);
  const metrics: MetricsTable[] = [];
  let finalSnapshot: Float64Array = new Float64Array(0);
  let nonZero = 0;
  for (let rep = 0; rep < config.repetitions; rep++) {
    const rng = new SplitMix64(deriveSeed(config.seed, rep));
    const model = makeModel(dataset, rng);
    const order = dataset.trainX.map((_, i) => i);
    const epochLosses: number[] = [];
    const testAccuracies: number[] = [];
    for (let epoch = 0; epoch < config.epochs; epoch++) {
      rng.shuffle(order);
      let lossSum = 0;
      for (let start = 0; start < order.length; start += config.batchSize) {
        const end = Math.min(start + config.batchSize, order.length);
        for (let i = start; i < end; i++) {
          const idx = order[i];
          lossSum += model.trainSample(dataset.trainX[idx], dataset.trainY[idx]);
        }
        model.step(config.learningRate, end - start);
      }
      epochLosses.push(lossSum / order.length);
      testAccuracies.push(evaluate(model, dataset));
    }
    metrics.push({
      repetition: rep,
      epochLosses,
      testAccuracies,
      bestAccuracy: Math.max(...testAccuracies),
    });
    finalSnapshot = model.snapshot();
    nonZero = model.layers.reduce((acc, layer) => acc + layer.nonZeroWeights(), 0);
  }
  return { metrics, finalSnapshot, nonZeroWeights: nonZero };
}

export function compareRuns(tables: MetricsTable[][], labels: string[]): SummaryRow[] {
  if (tables.length !== labels.length) {
    throw new Error("one label per metrics group is required");
  }
  const reps = new Set(tables.map((t) => t.length));
  if (reps.size !== 1) {
    throw new Error("every label needs the same number of repetitions");
  }
  const means = tables.map(
    (group) => group.reduce((acc, t) => acc + t.bestAccuracy, 0) / group.length
  );
  return labels.map((label, i) => ({
    label,
    meanBestAccuracy: means[i],
    diffVsFirst: Math.abs(means[i] - means[0]),
  }));
}

export function renderSummary(rows: SummaryRow[]): string {
  const header = "topology          mean best acc   |diff vs first|";
  const lines = rows.map(
    (row) =>
      `${row.label.padEnd(18)}${row.meanBestAccuracy.toFixed(2).padStart(13)}%` +
      `${row.diffVsFirst.toFixed(2).padStart(17)}%`
  );
  return [header, ...lines].join("\n");
}
