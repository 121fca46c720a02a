export { deriveArcs } from "./arcs";
export { BackendUnavailableError, loadWinkBackend } from "./backend";
export {
  PreprocessError,
  preprocessArticle,
  toJsonLine,
  type PreprocessOptions,
} from "./preprocess";
export {
  DEFAULT_RELATION_MAP_PATH,
  loadRelationMap,
  type RelationMap,
} from "./relmap";
export * from "./types";
