import { readFileSync } from 'fs';
import { join } from 'path';
import { describe, expect, it } from 'vitest';

import { SchemaError, parseRegion, parseSweep, parseTable } from '../src/csv';

const fixture = (name: string) => readFileSync(join(__dirname, '..', 'fixtures', name), 'utf-8');

describe('parseSweep', () => {
  it('reads the one-way sweep fixture', () => {
    const table = parseSweep(fixture('oneway-sweep.csv'));
    expect(table.series.map((s) => s.name)).toEqual(['df', 'nnc', 'combined', 'cutset']);
    expect(table.x).toHaveLength(21);
    expect(table.x[0]).toBeCloseTo(0.05, 12);
    for (const s of table.series) {
      expect(s.values).toHaveLength(21);
    }
  });

  it('reads the two-way sum-rate fixture', () => {
    const table = parseSweep(fixture('twrc-sum-sweep.csv'));
    expect(table.series.map((s) => s.name)).toEqual(['rankov_df', 'xie_df', 'lnnc', 'combined']);
  });

  it('rejects a region CSV', () => {
    expect(() => parseSweep(fixture('twrc-region.csv'))).toThrow(SchemaError);
  });

  it('rejects an empty body', () => {
    expect(() => parseSweep('d,df,nnc\n')).toThrow(SchemaError);
  });

  it('rejects ragged rows and non-numeric cells', () => {
    expect(() => parseSweep('d,df\n0.1,2.0,9\n')).toThrow(SchemaError);
    expect(() => parseSweep('d,df\n0.1,abc\n')).toThrow(SchemaError);
  });
});

describe('parseRegion', () => {
  it('reads the region fixture and groups schemes', () => {
    const table = parseRegion(fixture('twrc-region.csv'));
    expect(table.schemes.map((s) => s.name)).toEqual([
      'rankov_df',
      'xie_df',
      'lnnc',
      'combined',
    ]);
    for (const scheme of table.schemes) {
      expect(scheme.points.length).toBeGreaterThanOrEqual(3);
      expect(scheme.points[0]).toEqual([0, 0]);
    }
  });

  it('rejects a sweep CSV', () => {
    expect(() => parseRegion(fixture('oneway-sweep.csv'))).toThrow(SchemaError);
  });

  it('rejects out-of-order vertex indices', () => {
    const bad = 'scheme,vertex_index,r1,r2\na,0,0,0\na,2,1,0\n';
    expect(() => parseRegion(bad)).toThrow(SchemaError);
  });
});

describe('parseTable', () => {
  it('dispatches by kind', () => {
    expect(parseTable('sweep', fixture('oneway-sweep.csv')).kind).toBe('sweep');
    expect(parseTable('region', fixture('twrc-region.csv')).kind).toBe('region');
  });
});
