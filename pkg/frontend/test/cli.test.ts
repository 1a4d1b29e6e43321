import { execFileSync } from 'child_process';
import { existsSync, mkdtempSync, readFileSync } from 'fs';
import { tmpdir } from 'os';
import { join } from 'path';
import { describe, expect, it } from 'vitest';

const CLI = join(__dirname, '..', 'dist', 'cli.js');
const fixture = (name: string) => join(__dirname, '..', 'fixtures', name);

function runCli(args: string[]): { code: number; stderr: string } {
  try {
    execFileSync('node', [CLI, ...args], { stdio: 'pipe' });
    return { code: 0, stderr: '' };
  } catch (err: any) {
    return { code: err.status ?? 1, stderr: String(err.stderr ?? '') };
  }
}

describe('plots CLI', () => {
  const outDir = mkdtempSync(join(tmpdir(), 'plots-'));

  it('renders all three figure kinds from the golden CSVs', () => {
    const jobs: [string, string][] = [
      ['sweep', 'oneway-sweep.csv'],
      ['sweep', 'twrc-sum-sweep.csv'],
      ['region', 'twrc-region.csv'],
    ];
    for (const [kind, name] of jobs) {
      const out = join(outDir, `${name}.svg`);
      const { code } = runCli([kind, fixture(name), out]);
      expect(code).toBe(0);
      expect(existsSync(out)).toBe(true);
      expect(readFileSync(out, 'utf-8')).toContain('<svg');
    }
  });

  it('refuses a schema-mismatched CSV', () => {
    const out = join(outDir, 'bad.svg');
    const { code, stderr } = runCli(['region', fixture('oneway-sweep.csv'), out]);
    expect(code).toBe(2);
    expect(stderr).toContain('schema mismatch');
    const swapped = runCli(['sweep', fixture('twrc-region.csv'), out]);
    expect(swapped.code).toBe(2);
  });

  it('reports usage errors', () => {
    expect(runCli(['nonsense', 'a.csv', 'b.svg']).code).toBe(2);
    expect(runCli([]).code).toBe(2);
  });

  it('reports missing input as an I/O failure', () => {
    const { code } = runCli(['sweep', join(outDir, 'missing.csv'), join(outDir, 'x.svg')]);
    expect(code).toBe(3);
  });
});
