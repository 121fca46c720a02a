import type { RelationMap } from "./relmap";
import { ROOT_HEAD, type ArcJson, type ParsedToken } from "./types";

/**
 * Derive the dependency arcs the downstream pipeline consumes from the
 * backend's POS tags, following the patterns declared in the relation
 * map. This is a declared approximation of a full parse: only the root
 * and the three marker relations are emitted.
 */
export function deriveArcs(tokens: ParsedToken[], map: RelationMap): ArcJson[] {
  if (tokens.length === 0) {
    return [];
  }

  const rootIndex = findRoot(tokens, map);
  if (rootIndex === null) {
    return [];
  }
  const arcs: ArcJson[] = [{ rel: "root", head: ROOT_HEAD, dep: rootIndex }];

  for (let i = 0; i < tokens.length; i++) {
    const pos = tokens[i].pos;

    if (map.advmod.dependent_pos.includes(pos) && i !== rootIndex) {
      arcs.push({ rel: "advmod", head: rootIndex, dep: i });
      continue;
    }

    if (map.acomp.dependent_pos.includes(pos)) {
      const head = findAcompHead(tokens, i, map);
      if (head !== null) {
        arcs.push({ rel: "acomp", head, dep: i });
      }
      continue;
    }

    if (map.xcomp.dependent_pos.includes(pos)) {
      const head = findXcompHead(tokens, i, map);
      if (head !== null) {
        arcs.push({ rel: "xcomp", head, dep: i });
      }
    }
  }
  return arcs;
}

function findRoot(tokens: ParsedToken[], map: RelationMap): number | null {
  for (const pos of map.root.pos_priority) {
    const index = tokens.findIndex((t) => t.pos === pos);
    if (index >= 0) {
      return index;
    }
  }
  const fallback = tokens.findIndex((t) => t.pos !== "PUNCT");
  return fallback >= 0 ? fallback : null;
}

/** Predicative adjective: nearest preceding verb with only light
 * material (adverbs, conjunctions, other adjectives) in between. */
function findAcompHead(
  tokens: ParsedToken[],
  adjective: number,
  map: RelationMap
): number | null {
  for (let j = adjective - 1; j >= 0; j--) {
    const pos = tokens[j].pos;
    if (map.acomp.head_pos.includes(pos)) {
      return j;
    }
    if (!map.acomp.allowed_between.includes(pos)) {
      return null;
    }
  }
  return null;
}

/** Open clausal complement: verb + "to" marker + verb. */
function findXcompHead(
  tokens: ParsedToken[],
  verb: number,
  map: RelationMap
): number | null {
  const marker = verb - 1;
  if (marker < 1) {
    return null;
  }
  const markerToken = tokens[marker];
  if (
    markerToken.pos !== map.xcomp.marker_pos ||
    markerToken.lemma.toLowerCase() !== map.xcomp.marker_lemma
  ) {
    return null;
  }
  for (let j = marker - 1; j >= 0; j--) {
    if (map.xcomp.head_pos.includes(tokens[j].pos)) {
      return j;
    }
    if (tokens[j].pos !== "ADV") {
      return null;
    }
  }
  return null;
}
