/** Wire types shared with the estimation service. */
export {};
