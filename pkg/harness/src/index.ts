export { SplitMix64, deriveSeed, mix64 } from "./rng";
export { MaskFile, MaskIntegrityError, parseMaskFile } from "./maskfile";
export { Dataset, loadDataset } from "./dataset";
export { MaskedLinear, Mlp } from "./mlp";
export {
  ConfigurationError,
  MetricsTable,
  RunConfig,
  SummaryRow,
  TrainResult,
  compareRuns,
  loadMasks,
  renderSummary,
  trainMaskedMlp,
  trainUnmasked,
} from "./harness";
export { FULL_SCALE_REFERENCE, ReferenceRow } from "./fixtures";
