export { FigureKind, RegionTable, SchemaError, SweepTable, parseRegion, parseSweep, parseTable } from './csv';
export { renderRegion, renderSweep, seriesCount } from './svg';
export { main, render } from './cli';
