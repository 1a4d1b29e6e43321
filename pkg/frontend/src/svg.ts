import { RegionTable, SweepTable } from './csv';

const WIDTH = 640;
const HEIGHT = 440;
const MARGIN = { top: 24, right: 24, bottom: 52, left: 64 };
const PALETTE = ['#1f77b4', '#d62728', '#2ca02c', '#9467bd', '#ff7f0e', '#8c564b'];

interface Extent {
  lo: number;
  hi: number;
}

function padded(values: number[]): Extent {
  let lo = Math.min(...values);
  let hi = Math.max(...values);
  if (lo === hi) {
    lo -= 0.5;
    hi += 0.5;
  }
  const pad = 0.05 * (hi - lo); // data extent plus 5% margin
  return { lo: lo - pad, hi: hi + pad };
}

function scale(extent: Extent, lo: number, hi: number): (v: number) => number {
  const span = extent.hi - extent.lo;
  return (v) => lo + ((v - extent.lo) / span) * (hi - lo);
}

function ticks(extent: Extent, count = 6): number[] {
  const rawStep = (extent.hi - extent.lo) / count;
  const mag = 10 ** Math.floor(Math.log10(rawStep));
  const step = [1, 2, 5, 10].map((m) => m * mag).find((s) => s >= rawStep) ?? rawStep;
  const first = Math.ceil(extent.lo / step) * step;
  const out: number[] = [];
  for (let v = first; v <= extent.hi + 1e-12; v += step) {
    out.push(Number(v.toPrecision(10)));
  }
  return out;
}

function formatTick(v: number): string {
  return Number(v.toPrecision(6)).toString();
}

function escapeXml(text: string): string {
  return text.replace(/&/g, '&amp;').replace(/</g, '&lt;').replace(/>/g, '&gt;');
}

function axes(xExt: Extent, yExt: Extent, xLabel: string, yLabel: string): string {
  const x0 = MARGIN.left;
  const x1 = WIDTH - MARGIN.right;
  const y0 = HEIGHT - MARGIN.bottom;
  const y1 = MARGIN.top;
  const sx = scale(xExt, x0, x1);
  const sy = scale(yExt, y0, y1);
  const parts: string[] = [];
  parts.push(`<line x1="${x0}" y1="${y0}" x2="${x1}" y2="${y0}" stroke="#333"/>`);
  parts.push(`<line x1="${x0}" y1="${y0}" x2="${x0}" y2="${y1}" stroke="#333"/>`);
  for (const t of ticks(xExt)) {
    const px = sx(t);
    parts.push(`<line x1="${px}" y1="${y0}" x2="${px}" y2="${y0 + 5}" stroke="#333"/>`);
    parts.push(
      `<text x="${px}" y="${y0 + 20}" text-anchor="middle" font-size="12">${formatTick(t)}</text>`,
    );
  }
  for (const t of ticks(yExt)) {
    const py = sy(t);
    parts.push(`<line x1="${x0 - 5}" y1="${py}" x2="${x0}" y2="${py}" stroke="#333"/>`);
    parts.push(
      `<text x="${x0 - 9}" y="${py + 4}" text-anchor="end" font-size="12">${formatTick(t)}</text>`,
    );
  }
  parts.push(
    `<text x="${(x0 + x1) / 2}" y="${HEIGHT - 12}" text-anchor="middle" font-size="14">${escapeXml(xLabel)}</text>`,
  );
  parts.push(
    `<text transform="translate(16,${(y0 + y1) / 2}) rotate(-90)" text-anchor="middle" font-size="14">${escapeXml(yLabel)}</text>`,
  );
  return parts.join('\n');
}

function legend(names: string[]): string {
  const x = WIDTH - MARGIN.right - 150;
  const parts: string[] = [];
  names.forEach((name, i) => {
    const y = MARGIN.top + 14 + 18 * i;
    const color = PALETTE[i % PALETTE.length];
    parts.push(`<line x1="${x}" y1="${y - 4}" x2="${x + 22}" y2="${y - 4}" stroke="${color}" stroke-width="2"/>`);
    parts.push(`<text x="${x + 28}" y="${y}" font-size="12">${escapeXml(name)}</text>`);
  });
  return parts.join('\n');
}

function document(body: string): string {
  return [
    '<?xml version="1.0" encoding="UTF-8"?>',
    `<svg xmlns="http://www.w3.org/2000/svg" width="${WIDTH}" height="${HEIGHT}" viewBox="0 0 ${WIDTH} ${HEIGHT}">`,
    `<rect width="${WIDTH}" height="${HEIGHT}" fill="white"/>`,
    body,
    '</svg>',
  ].join('\n');
}

export function renderSweep(table: SweepTable): string {
  const xExt = padded(table.x);
  const yExt = padded(table.series.flatMap((s) => s.values));
  const sx = scale(xExt, MARGIN.left, WIDTH - MARGIN.right);
  const sy = scale(yExt, HEIGHT - MARGIN.bottom, MARGIN.top);
  const lines = table.series.map((s, i) => {
    const points = s.values
      .map((v, k) => `${sx(table.x[k]).toFixed(2)},${sy(v).toFixed(2)}`)
      .join(' ');
    const color = PALETTE[i % PALETTE.length];
    return `<polyline class="series" fill="none" stroke="${color}" stroke-width="2" points="${points}"/>`;
  });
  const body = [
    axes(xExt, yExt, `relay position ${table.xLabel}`, 'rate (bits per channel use)'),
    ...lines,
    legend(table.series.map((s) => s.name)),
  ].join('\n');
  return document(body);
}

export function renderRegion(table: RegionTable): string {
  const xs = table.schemes.flatMap((s) => s.points.map((p) => p[0]));
  const ys = table.schemes.flatMap((s) => s.points.map((p) => p[1]));
  const xExt = padded(xs);
  const yExt = padded(ys);
  const sx = scale(xExt, MARGIN.left, WIDTH - MARGIN.right);
  const sy = scale(yExt, HEIGHT - MARGIN.bottom, MARGIN.top);
  const polygons = table.schemes.map((s, i) => {
    const points = s.points
      .map(([r1, r2]) => `${sx(r1).toFixed(2)},${sy(r2).toFixed(2)}`)
      .join(' ');
    const color = PALETTE[i % PALETTE.length];
    return `<polygon class="series" fill="none" stroke="${color}" stroke-width="2" points="${points}"/>`;
  });
  const body = [
    axes(xExt, yExt, 'R1 (bits per channel use)', 'R2 (bits per channel use)'),
    ...polygons,
    legend(table.schemes.map((s) => s.name)),
  ].join('\n');
  return document(body);
}

export function seriesCount(svg: string): number {
  return (svg.match(/class="series"/g) ?? []).length;
}
