import assert from "node:assert/strict";
import * as fs from "node:fs";
import * as path from "node:path";
import { test } from "node:test";

import { loadMasks, trainMaskedMlp } from "../src/harness";
import { parseMaskFile } from "../src/maskfile";
import { Mlp } from "../src/mlp";
import { SplitMix64 } from "../src/rng";
import { constructionMasks, expanderMasks } from "./gen";

const CONFIG = {
  maskDir: "",
  dataset: "digits",
  epochs: 2,
  batchSize: 32,
  learningRate: 0.15,
  seed: 11,
  repetitions: 1,
};

test("masked entries stay exactly zero through training", () => {
  const masks = loadMasks(constructionMasks());
  const result = trainMaskedMlp(CONFIG, masks);
  // the snapshot interleaves [weights, bias] per layer; check the masked layers
  let offset = 0;
  for (const mask of masks) {
    const size = mask.rows * mask.cols;
    for (let k = 0; k < size; k++) {
      if (!mask.bits[k]) {
        assert.equal(result.finalSnapshot[offset + k], 0);
      }
    }
    offset += size + mask.cols; // skip bias
  }
});

test("swapping equal-density topologies keeps the parameter count", () => {
  const a = trainMaskedMlp(CONFIG, loadMasks(constructionMasks()));
  const b = trainMaskedMlp(CONFIG, loadMasks(expanderMasks()));
  assert.equal(a.nonZeroWeights, b.nonZeroWeights);
});

test("same config twice gives identical metrics and parameters", () => {
  const masks = loadMasks(expanderMasks());
  const a = trainMaskedMlp(CONFIG, masks);
  const b = trainMaskedMlp(CONFIG, masks);
  assert.deepEqual(a.metrics, b.metrics);
  assert.equal(a.finalSnapshot.length, b.finalSnapshot.length);
  for (let i = 0; i < a.finalSnapshot.length; i++) {
    assert.ok(Object.is(a.finalSnapshot[i], b.finalSnapshot[i]));
  }
});

test("half-density masks clear chance level within five epochs", () => {
  const masks = loadMasks(constructionMasks());
  const result = trainMaskedMlp({ ...CONFIG, epochs: 5 }, masks);
  assert.ok(Math.max(...result.metrics[0].testAccuracies) > 10);
});

test("forward respects the mask pattern", () => {
  const file = path.join(expanderMasks(), "layer-00.srnm");
  const mask = parseMaskFile(fs.readFileSync(file));
  const rng = new SplitMix64(3);
  const model = new Mlp([64, 64], [mask.bits], rng);
  const layer = model.layers[0];
  for (let k = 0; k < 64 * 64; k++) {
    if (!mask.bits[k]) assert.equal(layer.weights[k], 0);
  }
});
