// Exact decimal-string arithmetic for the few sums the UI displays.
// The service ships every quantity as a decimal string; adding them in
// floating point would betray the whole exactness story.

export function addDecimals(values: string[]): string {
    let maxFrac = 0;
    for (const v of values) {
        const dot = v.indexOf('.');
        if (dot >= 0) maxFrac = Math.max(maxFrac, v.length - dot - 1);
    }
    let total = 0n;
    for (const v of values) {
        const neg = v.startsWith('-');
        const body = neg ? v.slice(1) : v;
        const [whole, frac = ''] = body.split('.');
        const scaled = BigInt(whole + frac.padEnd(maxFrac, '0'));
        total += neg ? -scaled : scaled;
    }
    return formatScaled(total, maxFrac);
}

export function compareDecimals(a: string, b: string): number {
    const diff = addDecimals([a, negate(b)]);
    return diff.startsWith('-') ? -1 : diff === '0' ? 0 : 1;
}

function negate(v: string): string {
    if (v === '0') return v;
    return v.startsWith('-') ? v.slice(1) : '-' + v;
}

function formatScaled(total: bigint, frac: number): string {
    const sign = total < 0n ? '-' : '';
    const digits = (total < 0n ? -total : total).toString().padStart(frac + 1, '0');
    if (frac === 0) return sign + digits;
    const whole = digits.slice(0, -frac);
    const tail = digits.slice(-frac).replace(/0+$/, '');
    return tail ? `${sign}${whole}.${tail}` : sign + whole || '0';
}
