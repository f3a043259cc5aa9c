#include <stdio.h>
#include <stdlib.h>

/* port number from the command line */
int main(int argc, char *argv[])
{
    if (argc < 2) {
        fprintf(stderr, "usage: %s port\n", argv[0]);
        return 1;
    }
    int port = atoi(argv[1]);
    printf("listening on %d\n", port);
    return 0;
}
