class Counters {
    int countPositive(int limit) {
        int count = 0;
        for (int i = -limit; i < limit; i++) {
            if (i > 0) {
                count++;
            }
        }
        return count;
    }

    int sumRange(int start, int end) {
        int total = 0;
        int index = start;
        while (index < end) {
            total += index;
            index++;
        }
        return total;
    }

    long factorial(int n) {
        long product = 1L;
        for (int k = 2; k <= n && k < 20; k++) {
            product *= k;
        }
        return product;
    }

    boolean isPrime(int candidate) {
        boolean prime = candidate > 1;
        for (int d = 2; d * d <= candidate && prime; d++) {
            if (candidate % d == 0) {
                prime = false;
            }
        }
        return prime;
    }
}
