import Papa from 'papaparse';

export type FigureKind = 'sweep' | 'region';

/** One line per scheme over the sweep variable in the first column. */
export interface SweepTable {
  kind: 'sweep';
  xLabel: string;
  x: number[];
  series: { name: string; values: number[] }[];
}

/** Closed hull polylines, one per scheme. */
export interface RegionTable {
  kind: 'region';
  schemes: { name: string; points: [number, number][] }[];
}

export class SchemaError extends Error {}

function parseRows(text: string): string[][] {
  const parsed = Papa.parse<string[]>(text.trim(), { skipEmptyLines: true });
  if (parsed.errors.length > 0) {
    throw new SchemaError(`CSV parse error: ${parsed.errors[0].message}`);
  }
  const rows = parsed.data;
  if (rows.length < 2) {
    throw new SchemaError('CSV needs a header row and at least one data row');
  }
  return rows;
}

function toNumber(raw: string, where: string): number {
  const value = Number(raw);
  if (!Number.isFinite(value)) {
    throw new SchemaError(`expected a finite number at ${where}, got "${raw}"`);
  }
  return value;
}

export function parseSweep(text: string): SweepTable {
  const rows = parseRows(text);
  const header = rows[0];
  if (header[0] !== 'd' || header.length < 2) {
    throw new SchemaError(
      `sweep CSV must start with a "d" column followed by scheme columns, got [${header.join(',')}]`,
    );
  }
  const x: number[] = [];
  const series = header.slice(1).map((name) => ({ name, values: [] as number[] }));
  for (let i = 1; i < rows.length; i++) {
    const row = rows[i];
    if (row.length !== header.length) {
      throw new SchemaError(`row ${i + 1} has ${row.length} fields, expected ${header.length}`);
    }
    x.push(toNumber(row[0], `row ${i + 1}, column d`));
    for (let j = 1; j < row.length; j++) {
      series[j - 1].values.push(toNumber(row[j], `row ${i + 1}, column ${header[j]}`));
    }
  }
  return { kind: 'sweep', xLabel: header[0], x, series };
}

const REGION_HEADER = ['scheme', 'vertex_index', 'r1', 'r2'];

export function parseRegion(text: string): RegionTable {
  const rows = parseRows(text);
  const header = rows[0];
  if (header.length !== 4 || REGION_HEADER.some((name, i) => header[i] !== name)) {
    throw new SchemaError(
      `region CSV header must be [${REGION_HEADER.join(',')}], got [${header.join(',')}]`,
    );
  }
  const byName = new Map<string, [number, number][]>();
  for (let i = 1; i < rows.length; i++) {
    const row = rows[i];
    if (row.length !== 4) {
      throw new SchemaError(`row ${i + 1} has ${row.length} fields, expected 4`);
    }
    const name = row[0];
    const index = toNumber(row[1], `row ${i + 1}, vertex_index`);
    const r1 = toNumber(row[2], `row ${i + 1}, r1`);
    const r2 = toNumber(row[3], `row ${i + 1}, r2`);
    if (!byName.has(name)) {
      byName.set(name, []);
    }
    const points = byName.get(name)!;
    if (index !== points.length) {
      throw new SchemaError(`vertex_index for ${name} must count up from 0 (row ${i + 1})`);
    }
    points.push([r1, r2]);
  }
  return {
    kind: 'region',
    schemes: [...byName.entries()].map(([name, points]) => ({ name, points })),
  };
}

export function parseTable(kind: FigureKind, text: string): SweepTable | RegionTable {
  if (kind === 'sweep') {
    return parseSweep(text);
  }
  if (kind === 'region') {
    return parseRegion(text);
  }
  throw new SchemaError(`unknown figure kind "${kind}"`);
}
