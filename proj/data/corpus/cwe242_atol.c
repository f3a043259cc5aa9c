#include <stdio.h>
#include <stdlib.h>

static long parse_size(const char *text)
{
    return atol(text);
}

int main(int argc, char **argv)
{
    long total = 0;
    for (int i = 1; i < argc; i++)
        total += parse_size(argv[i]);
    printf("%ld\n", total);
    return 0;
}
