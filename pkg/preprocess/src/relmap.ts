import * as fs from "fs";
import * as path from "path";

// The relation-mapping table is versioned data, not code: it declares
// which part-of-speech patterns of the current backend count as the
// root / acomp / xcomp / advmod relations downstream.

export interface RelationMap {
  version: string;
  backend: string;
  root: { pos_priority: string[] };
  advmod: { dependent_pos: string[] };
  acomp: {
    dependent_pos: string[];
    head_pos: string[];
    allowed_between: string[];
  };
  xcomp: {
    head_pos: string[];
    marker_pos: string;
    marker_lemma: string;
    dependent_pos: string[];
  };
}

export const DEFAULT_RELATION_MAP_PATH = path.join(
  __dirname,
  "..",
  "data",
  "relation_map.json"
);

export function loadRelationMap(mapPath: string = DEFAULT_RELATION_MAP_PATH): RelationMap {
  const raw = JSON.parse(fs.readFileSync(mapPath, "utf-8"));
  for (const key of ["version", "backend", "root", "advmod", "acomp", "xcomp"]) {
    if (!(key in raw)) {
      throw new Error(`relation map ${mapPath} is missing '${key}'`);
    }
  }
  return raw as RelationMap;
}
