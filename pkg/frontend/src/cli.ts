#!/usr/bin/env node
import { readFileSync, writeFileSync } from 'fs';

import { FigureKind, SchemaError, parseTable } from './csv';
import { renderRegion, renderSweep } from './svg';

const USAGE = 'usage: plots <sweep|region> <csv-in> <image-out>';

export function render(kind: FigureKind, csvText: string): string {
  const table = parseTable(kind, csvText);
  return table.kind === 'sweep' ? renderSweep(table) : renderRegion(table);
}

export function main(argv: string[]): number {
  if (argv.length !== 3 || (argv[0] !== 'sweep' && argv[0] !== 'region')) {
    console.error(USAGE);
    return 2;
  }
  const [kind, csvPath, outPath] = argv;
  let text: string;
  try {
    text = readFileSync(csvPath, 'utf-8');
  } catch (err) {
    console.error(`cannot read ${csvPath}: ${(err as Error).message}`);
    return 3;
  }
  let svg: string;
  try {
    svg = render(kind as FigureKind, text);
  } catch (err) {
    if (err instanceof SchemaError) {
      console.error(`schema mismatch: ${err.message}`);
      return 2;
    }
    throw err;
  }
  try {
    writeFileSync(outPath, svg, 'utf-8');
  } catch (err) {
    console.error(`cannot write ${outPath}: ${(err as Error).message}`);
    return 3;
  }
  return 0;
}

if (require.main === module) {
  process.exit(main(process.argv.slice(2)));
}
