import { defineConfig } from 'vitest/config';

export default defineConfig({
    resolve: {
        alias: [
            // src modules import each other with browser-style .js suffixes;
            // map them back onto the TypeScript sources for the test runner
            { find: /^(\.{1,2}\/.*)\.js$/, replacement: '$1' },
        ],
    },
    test: {
        environment: 'node',
        testTimeout: 120_000,
        hookTimeout: 120_000,
    },
});
