#!/usr/bin/env node
// CLI: preprocess --in raw.txt --id ID --out corpus.jsonl
// Reads plain article text, appends one JSONL document to the output.

import * as fs from "fs";

import { BackendUnavailableError, loadWinkBackend } from "./backend";
import { PreprocessError, preprocessArticle, toJsonLine } from "./preprocess";

interface CliArgs {
  input: string;
  id: string;
  out: string;
}

function parseArgs(argv: string[]): CliArgs {
  const values: Record<string, string> = {};
  for (let i = 0; i < argv.length; i += 2) {
    const flag = argv[i];
    const value = argv[i + 1];
    if (!flag.startsWith("--") || value === undefined) {
      throw new PreprocessError(`unexpected argument: ${flag}`);
    }
    values[flag.slice(2)] = value;
  }
  for (const required of ["in", "id", "out"]) {
    if (!(required in values)) {
      throw new PreprocessError(
        `missing --${required} (usage: preprocess --in raw.txt --id ID --out corpus.jsonl)`
      );
    }
  }
  return { input: values["in"], id: values["id"], out: values["out"] };
}

export function main(argv: string[] = process.argv.slice(2)): number {
  try {
    const args = parseArgs(argv);
    const body = fs.readFileSync(args.input, "utf-8");
    const backend = loadWinkBackend();
    const doc = preprocessArticle(
      { id: args.id, body },
      backend,
      { warn: (message) => console.error(`warning: ${message}`) }
    );
    fs.appendFileSync(args.out, toJsonLine(doc) + "\n", "utf-8");
    console.error(
      `wrote ${doc.sentences.length} sentences for ${args.id} to ${args.out} ` +
        `(backend ${backend.name})`
    );
    return 0;
  } catch (error) {
    if (
      error instanceof PreprocessError ||
      error instanceof BackendUnavailableError ||
      (error as NodeJS.ErrnoException).code === "ENOENT"
    ) {
      console.error(`error: ${(error as Error).message}`);
      return 2;
    }
    throw error;
  }
}

if (require.main === module) {
  process.exit(main());
}
